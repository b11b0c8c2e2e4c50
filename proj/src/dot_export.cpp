#include "linkpat/dot_export.hpp"

#include <map>
#include <sstream>

#include "linkpat/json_io.hpp"

namespace linkpat {

std::string poset_to_dot(const OrbitPoset& poset) {
    std::ostringstream out;
    out << "digraph poset {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    std::map<int, std::vector<int>, std::greater<int>> by_dim;
    for (std::size_t s = 0; s < poset.nodes.size(); ++s) {
        const auto& node = poset.nodes[s];
        out << "  n" << s << " [label=\"" << cyclic_form(node.sigma) << " d=" << node.dim << "\"];\n";
        by_dim[node.dim].push_back(static_cast<int>(s));
    }
    for (const auto& [dim, ids] : by_dim) {
        out << "  { rank=same;";
        for (int id : ids) out << " n" << id << ";";
        out << " }\n";
    }
    for (const auto& [p, c] : poset.hasse_edges) out << "  n" << p << " -> n" << c << ";\n";
    out << "}\n";
    return out.str();
}

std::string meander_to_dot(const Meander& m) {
    std::ostringstream out;
    out << "graph meander {\n";
    out << "  layout=neato;\n";
    out << "  node [shape=point, width=0.08];\n";
    for (int p = 1; p <= m.n; ++p) out << "  p" << p << " [pos=\"" << p << ",0!\", xlabel=\"" << p << "\"];\n";
    for (const auto& [i, j] : m.top.arcs) out << "  p" << i << " -- p" << j << " [color=\"#1f4e8c\"];\n";
    for (const auto& [i, j] : m.bottom.arcs)
        out << "  p" << i << " -- p" << j << " [color=\"#a33b3b\", style=dashed];\n";
    out << "}\n";
    return out.str();
}

} // namespace linkpat

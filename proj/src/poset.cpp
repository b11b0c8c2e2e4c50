#include "linkpat/poset.hpp"

#include <algorithm>
#include <map>

#include "linkpat/covers.hpp"

namespace linkpat {

OrbitPoset build_poset(int n, std::optional<int> k, int cap) {
    OrbitPoset poset;
    poset.n = n;
    poset.k = k;

    std::map<Involution, int> index;
    for (const auto& sigma : enumerate_involutions(n, k, cap)) {
        index.emplace(sigma, static_cast<int>(poset.nodes.size()));
        poset.nodes.push_back({sigma, dim_via_pattern(sigma), rank_matrix(sigma)});
    }

    for (std::size_t p = 0; p < poset.nodes.size(); ++p) {
        CoverSet cov = cover_C(poset.nodes[p].sigma);
        auto link = [&](const Involution& child) {
            auto it = index.find(child);
            if (it == index.end())
                throw Error("internal: cover target missing from node set");
            poset.hasse_edges.emplace_back(static_cast<int>(p), it->second);
        };
        for (const auto& m : cov.d_moves) link(m.result);
        if (!k)
            for (const auto& s : cov.n_moves) link(s);
    }
    std::sort(poset.hasse_edges.begin(), poset.hasse_edges.end());
    return poset;
}

} // namespace linkpat

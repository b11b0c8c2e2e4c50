#include "linkpat/meander.hpp"

#include <string>

namespace linkpat {

namespace {

// Other endpoint of an arc.
int across(const Arc& a, int p) { return p == a.first ? a.second : a.first; }

} // namespace

Meander build_meander(const Involution& top, const Involution& bottom) {
    if (top.n != bottom.n)
        throw SizeMismatch("meander over n=" + std::to_string(top.n) + " top and n=" + std::to_string(bottom.n) +
                           " bottom");
    Meander m;
    m.n = top.n;
    m.top = top;
    m.bottom = bottom;

    // arc index at each point, per side; -1 when the point is free there
    std::vector<int> at_top(m.n + 1, -1), at_bottom(m.n + 1, -1);
    for (std::size_t s = 0; s < top.arcs.size(); ++s)
        at_top[top.arcs[s].first] = at_top[top.arcs[s].second] = static_cast<int>(s);
    for (std::size_t s = 0; s < bottom.arcs.size(); ++s)
        at_bottom[bottom.arcs[s].first] = at_bottom[bottom.arcs[s].second] = static_cast<int>(s);

    std::vector<bool> seen_top(top.arcs.size(), false), seen_bottom(bottom.arcs.size(), false);

    // Walk from `start`, first step on `side`, until the walk leaves the
    // meander or closes; returns arcs in traversal order.
    auto walk = [&](int start, char side) {
        MeanderComponent comp;
        int p = start;
        while (true) {
            int idx = side == 't' ? at_top[p] : at_bottom[p];
            if (idx < 0) break; // open end: interval
            auto& seen = side == 't' ? seen_top : seen_bottom;
            if (seen[idx]) break; // closed back up: loop
            seen[idx] = true;
            const Arc& arc = side == 't' ? top.arcs[idx] : bottom.arcs[idx];
            comp.arcs.emplace_back(side, arc);
            p = across(arc, p);
            side = side == 't' ? 'b' : 't';
        }
        comp.length = static_cast<int>(comp.arcs.size());
        return comp;
    };

    for (int p = 1; p <= m.n; ++p) {
        bool has_top = at_top[p] >= 0, has_bottom = at_bottom[p] >= 0;
        if (!has_top && !has_bottom) {
            m.isolated.push_back(p);
            continue;
        }
        bool fresh = (has_top && !seen_top[at_top[p]]) || (has_bottom && !seen_bottom[at_bottom[p]]);
        if (!fresh) continue;
        if (has_top != has_bottom) {
            // open end here: the whole component is an interval starting at p
            auto comp = walk(p, has_top ? 't' : 'b');
            comp.kind = ComponentKind::interval;
            m.components.push_back(std::move(comp));
        } else {
            // p touches both sides; walk both directions and join at p
            auto forward = walk(p, 't');
            auto back = walk(p, 'b');
            if (back.arcs.empty()) {
                forward.kind = ComponentKind::loop; // closed through p
                m.components.push_back(std::move(forward));
            } else {
                // interval passing through p: stitch the reversed back half on
                MeanderComponent comp;
                comp.kind = ComponentKind::interval;
                for (auto it = back.arcs.rbegin(); it != back.arcs.rend(); ++it) comp.arcs.push_back(*it);
                comp.arcs.insert(comp.arcs.end(), forward.arcs.begin(), forward.arcs.end());
                comp.length = static_cast<int>(comp.arcs.size());
                m.components.push_back(std::move(comp));
            }
        }
    }
    return m;
}

MeanderClass classify_meander(const Meander& m) {
    MeanderClass c;
    for (const auto& comp : m.components) {
        if (comp.kind == ComponentKind::loop)
            ++c.loops;
        else if (comp.length % 2 == 0)
            ++c.even_intervals;
        else
            ++c.odd_intervals;
    }
    c.even_intervals += static_cast<int>(m.isolated.size());
    c.even = c.odd_intervals == 0;
    return c;
}

} // namespace linkpat

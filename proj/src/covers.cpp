#include "linkpat/covers.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "linkpat/order.hpp"

namespace linkpat {

namespace {

// Arc of sigma having p as an endpoint, if any.
std::optional<Arc> arc_at(const Involution& sigma, int p) {
    for (const auto& [i, j] : sigma.arcs)
        if (i == p || j == p) return Arc{i, j};
    return std::nullopt;
}

Involution replace_arcs(const Involution& sigma, const std::vector<Arc>& remove,
                        const std::vector<Arc>& add) {
    std::vector<Arc> arcs;
    for (const auto& a : sigma.arcs)
        if (std::find(remove.begin(), remove.end(), a) == remove.end()) arcs.push_back(a);
    arcs.insert(arcs.end(), add.begin(), add.end());
    return involution_from_arcs(sigma.n, std::move(arcs));
}

} // namespace

std::vector<Involution> cover_N(const Involution& sigma) {
    std::vector<Involution> out;
    for (const auto& arc : external_arcs(sigma)) out.push_back(replace_arcs(sigma, {arc}, {}));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Arc> l_arcs(const Involution& sigma, const Arc& arc) {
    std::vector<Arc> out;
    for (const auto& [is, js] : sigma.arcs) {
        if (js >= arc.first) continue;
        bool ok = true;
        for (int p = js + 1; p < arc.first && ok; ++p) {
            auto holder = arc_at(sigma, p);
            ok = holder && is <= holder->first && holder->second <= arc.second;
        }
        if (ok) out.emplace_back(is, js);
    }
    return out;
}

std::vector<Arc> ov_arcs(const Involution& sigma, const Arc& arc) {
    std::vector<Arc> out;
    for (const auto& outer : over_arcs(sigma, arc)) {
        // nothing strictly between the two arcs
        bool immediate = true;
        for (const auto& mid : under_arcs(sigma, outer))
            if (mid.first < arc.first && arc.second < mid.second) {
                immediate = false;
                break;
            }
        if (immediate) out.push_back(outer);
    }
    return out;
}

std::vector<DMove> cover_D(const Involution& sigma) {
    std::map<Involution, DMove> dedup;
    auto emit = [&](Involution result, MoveTag tag) {
        auto [it, fresh] = dedup.try_emplace(result, DMove{result, {}});
        it->second.tags.push_back(tag);
        (void)fresh;
    };

    auto fixed = sigma.fixed_points();

    for (const auto& arc : sigma.arcs) {
        const auto& [i, j] = arc;
        auto over = over_arcs(sigma, arc);

        // shrink left: pull i back to the nearest fixed point, legal only when
        // every covering arc still covers the landing point
        int m = 0;
        for (int p : fixed)
            if (p < i) m = p;
        if (m != 0 && std::all_of(over.begin(), over.end(), [&](const Arc& o) { return o.first < m; }))
            emit(replace_arcs(sigma, {arc}, {{m, j}}), MoveTag{MoveKind::shrink_left, arc, {0, 0}, m});

        // shrink right, mirrored
        m = 0;
        for (int p : fixed)
            if (p > j) {
                m = p;
                break;
            }
        if (m != 0 && std::all_of(over.begin(), over.end(), [&](const Arc& o) { return o.second > m; }))
            emit(replace_arcs(sigma, {arc}, {{i, m}}), MoveTag{MoveKind::shrink_right, arc, {0, 0}, m});
    }

    // cross with an arc lying entirely to the left, all gap points spent
    for (const auto& arc : sigma.arcs)
        for (const auto& left : l_arcs(sigma, arc))
            emit(replace_arcs(sigma, {arc, left}, {{left.first, arc.first}, {left.second, arc.second}}),
                 MoveTag{MoveKind::cross_left, arc, left});

    // cross with an immediately surrounding arc
    for (const auto& arc : sigma.arcs)
        for (const auto& outer : ov_arcs(sigma, arc))
            emit(replace_arcs(sigma, {arc, outer}, {{outer.first, arc.second}, {arc.first, outer.second}}),
                 MoveTag{MoveKind::cross_nested, arc, outer});

    std::vector<DMove> out;
    for (auto& [result, move] : dedup) out.push_back(std::move(move));
    return out; // std::map iteration is already sorted by result
}

CoverSet cover_C(const Involution& sigma) {
    CoverSet out;
    for (const auto& arc : external_max_arcs(sigma)) out.n_moves.push_back(replace_arcs(sigma, {arc}, {}));
    std::sort(out.n_moves.begin(), out.n_moves.end());
    out.d_moves = cover_D(sigma);
    return out;
}

Involution minimal_involution(int n, int k, int cap) {
    auto stratum = enumerate_involutions(n, k, cap);
    if (stratum.empty())
        throw OutOfRange("no involutions of length " + std::to_string(k) + " on " + std::to_string(n) + " points");
    // the unique minimum, if it exists, is the unique element of minimal dim
    int best = dim_via_pattern(stratum.front());
    std::vector<Involution> candidates{stratum.front()};
    for (std::size_t s = 1; s < stratum.size(); ++s) {
        int d = dim_via_pattern(stratum[s]);
        if (d < best) {
            best = d;
            candidates = {stratum[s]};
        } else if (d == best) {
            candidates.push_back(stratum[s]);
        }
    }
    if (candidates.size() != 1)
        throw NotUnique("stratum (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") has " +
                        std::to_string(candidates.size()) + " elements of minimal dimension");
    for (const auto& tau : stratum)
        if (!leq(candidates.front(), tau))
            throw NotUnique("minimal-dimension element is not below the whole stratum (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
    return candidates.front();
}

Involution sigma_bar_next(const Involution& sigma) {
    auto fixed = sigma.fixed_points();
    if (fixed.size() < 2)
        throw NoFixedPoints("needs at least two fixed points, have " + std::to_string(fixed.size()));
    int lo = fixed.front(), hi = fixed.back();
    auto emax = external_max_arcs(sigma); // canonical order: increasing left ends
    std::vector<Arc> add;
    int right = hi; // thread each arc into the right end of its predecessor
    for (const auto& [i, j] : emax) {
        add.emplace_back(i, right);
        right = j;
    }
    add.emplace_back(lo, right);
    return replace_arcs(sigma, emax, add);
}

} // namespace linkpat

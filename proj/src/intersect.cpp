#include "linkpat/intersect.hpp"

#include <algorithm>
#include <string>

namespace linkpat {

namespace {

void check_shapes(const TwoColumnTableau& s, const TwoColumnTableau& t) {
    if (s.n != t.n || s.k() != t.k())
        throw ShapeMismatch("tableaux of shapes (" + std::to_string(s.n - s.k()) + "," + std::to_string(s.k()) +
                            ")* and (" + std::to_string(t.n - t.k()) + "," + std::to_string(t.k()) + ")*");
}

} // namespace

RankMatrix intersection_matrix(const Involution& a, const Involution& b) {
    if (a.n != b.n)
        throw SizeMismatch("intersecting over n=" + std::to_string(a.n) + " and n=" + std::to_string(b.n));
    RankMatrix m = rank_matrix(a), rb = rank_matrix(b);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.entries[i][j] = std::min(m.entries[i][j], rb.entries[i][j]);
    return m;
}

IntersectionReport intersect(const Involution& a, const Involution& b, std::optional<int> restrict_k, int cap) {
    IntersectionReport rep;
    rep.min_matrix = intersection_matrix(a, b);

    int len_cap = std::min(a.length(), b.length());
    std::vector<Involution> inside;
    std::vector<RankMatrix> inside_rank;
    for (int k = restrict_k.value_or(0); k <= (restrict_k ? *restrict_k : len_cap); ++k)
        for (const auto& tau : enumerate_involutions(a.n, k, cap)) {
            RankMatrix r = rank_matrix(tau);
            if (leq_matrices(r, rep.min_matrix)) {
                inside.push_back(tau);
                inside_rank.push_back(std::move(r));
            }
        }

    // keep the maximal ones; anything below another candidate is interior.
    // sort by dim descending: a dominating element always has strictly larger
    // dim, so each candidate only needs checking against earlier keepers.
    std::vector<std::size_t> order(inside.size());
    for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return dim_via_pattern(inside[x]) > dim_via_pattern(inside[y]);
    });
    std::vector<std::size_t> keep;
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t top : keep)
            if (leq_matrices(inside_rank[idx], inside_rank[top])) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(idx);
    }

    for (std::size_t idx : keep) rep.components.push_back(inside[idx]);
    std::sort(rep.components.begin(), rep.components.end());
    int dim_a = dim_via_pattern(a), dim_b = dim_via_pattern(b);
    for (const auto& c : rep.components) {
        int d = dim_via_pattern(c);
        rep.dims.push_back(d);
        rep.codims_a.push_back(dim_a - d);
        rep.codims_b.push_back(dim_b - d);
    }
    rep.irreducible = rep.components.size() == 1;
    return rep;
}

bool codim1_criterion(const TwoColumnTableau& s, const TwoColumnTableau& t) {
    check_shapes(s, t);
    auto cls = classify_meander(build_meander(sigma_of_tableau(s), sigma_of_tableau(t)));
    return cls.even && cls.loops == s.k() - 1;
}

std::optional<int> tl_inner_exponent(const TwoColumnTableau& s, const TwoColumnTableau& t) {
    check_shapes(s, t);
    auto cls = classify_meander(build_meander(sigma_of_tableau(s), sigma_of_tableau(t)));
    if (!cls.even) return std::nullopt;
    return cls.loops;
}

std::optional<int> fung_codim(const TwoColumnTableau& s, const TwoColumnTableau& t) {
    auto r = tl_inner_exponent(s, t);
    if (!r) return std::nullopt;
    return s.k() - *r;
}

std::vector<std::pair<int, int>> one_segments(const Involution& a, const Involution& b) {
    RankMatrix m = intersection_matrix(a, b);
    // minimality needs only the two one-step subsegments: window counts are
    // monotone under containment, so deeper subsegments are already zero.
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m.n; ++i)
        for (int j = i + 1; j <= m.n; ++j)
            if (m.at(i, j) == 1 && m.at(i + 1, j) == 0 && m.at(i, j - 1) == 0) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

bool reducibility_sufficient(const TwoColumnTableau& s, const TwoColumnTableau& t) {
    check_shapes(s, t);
    RankMatrix m = intersection_matrix(sigma_of_tableau(s), sigma_of_tableau(t));
    auto segs = one_segments(sigma_of_tableau(s), sigma_of_tableau(t));
    for (std::size_t x = 0; x + 1 < segs.size(); ++x) {
        auto [i1, j1] = segs[x];
        auto [i2, j2] = segs[x + 1];
        if (i2 == j1) return true;
        if (i2 < j1 && m.at(i1, j2) == 1) return true;
    }
    return false;
}

} // namespace linkpat

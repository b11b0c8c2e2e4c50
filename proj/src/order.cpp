#include "linkpat/order.hpp"

#include <queue>
#include <string>
#include <unordered_set>

#include "linkpat/covers.hpp"

namespace linkpat {

RankMatrix rank_matrix(const Involution& sigma) {
    RankMatrix r;
    r.n = sigma.n;
    r.entries.assign(sigma.n, std::vector<int>(sigma.n, 0));
    for (int i = 1; i <= sigma.n; ++i)
        for (int j = i + 1; j <= sigma.n; ++j) {
            int count = 0;
            for (const auto& [a, b] : sigma.arcs)
                if (i <= a && b <= j) ++count;
            r.entries[i - 1][j - 1] = count;
        }
    return r;
}

bool leq_matrices(const RankMatrix& a, const RankMatrix& b) {
    if (a.n != b.n)
        throw SizeMismatch("comparing rank matrices over n=" + std::to_string(a.n) + " and n=" + std::to_string(b.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.entries[i][j] > b.entries[i][j]) return false;
    return true;
}

bool leq(const Involution& a, const Involution& b) {
    if (a.n != b.n)
        throw SizeMismatch("comparing involutions over n=" + std::to_string(a.n) + " and n=" + std::to_string(b.n));
    return leq_matrices(rank_matrix(a), rank_matrix(b));
}

bool is_rank2_matrix(const RankMatrix& r) {
    const int n = r.n;
    // zero on and below the diagonal, nothing negative
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i >= j && r.at(i, j) != 0) return false;
            if (r.at(i, j) < 0) return false;
        }
    // unit steps when a window grows by one point
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int v = r.at(i, j);
            if (v < r.at(i + 1, j) || v > r.at(i + 1, j) + 1) return false;
            if (v < r.at(i, j - 1) || v > r.at(i, j - 1) + 1) return false;
        }
    // a four-corner jump at (i,j) means an arc (i,j); its endpoints must be
    // spent: row i jumps against row i+1 exactly at columns >= j, column j
    // against j-1 exactly at rows <= i, and rows j, j+1 and columns i, i-1
    // coincide.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int v = r.at(i, j);
            if (!(v == r.at(i + 1, j) + 1 && v == r.at(i, j - 1) + 1 && v == r.at(i + 1, j - 1) + 1))
                continue;
            for (int t = 1; t < j; ++t)
                if (r.at(i, t) != r.at(i + 1, t)) return false;
            for (int t = j; t <= n; ++t)
                if (r.at(i, t) != r.at(i + 1, t) + 1) return false;
            for (int t = i + 1; t <= n; ++t)
                if (r.at(t, j) != r.at(t, j - 1)) return false;
            for (int t = 1; t <= i; ++t)
                if (r.at(t, j) != r.at(t, j - 1) + 1) return false;
            for (int t = 1; t <= n; ++t) {
                if (r.at(j, t) != r.at(j + 1, t)) return false;
                if (r.at(t, i) != r.at(t, i - 1)) return false;
            }
        }
    return true;
}

std::vector<Involution> closure(const Involution& sigma, int cap) {
    if (sigma.n > cap)
        throw ResourceCap("closure over n=" + std::to_string(sigma.n) + " points exceeds cap " + std::to_string(cap));
    std::unordered_set<Involution, InvolutionHash> seen{sigma};
    std::queue<Involution> frontier;
    frontier.push(sigma);
    while (!frontier.empty()) {
        Involution cur = std::move(frontier.front());
        frontier.pop();
        CoverSet cov = cover_C(cur);
        auto visit = [&](const Involution& next) {
            if (seen.insert(next).second) frontier.push(next);
        };
        for (const auto& s : cov.n_moves) visit(s);
        for (const auto& m : cov.d_moves) visit(m.result);
    }
    std::vector<Involution> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Involution> closure_by_filter(const Involution& sigma, int cap) {
    RankMatrix bound = rank_matrix(sigma);
    std::vector<Involution> out;
    for (const auto& tau : enumerate_involutions(sigma.n, std::nullopt, cap))
        if (leq_matrices(rank_matrix(tau), bound)) out.push_back(tau);
    return out;
}

} // namespace linkpat

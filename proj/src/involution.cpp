#include "linkpat/involution.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace linkpat {

int Involution::image(int p) const {
    for (const auto& [i, j] : arcs) {
        if (i == p) return j;
        if (j == p) return i;
    }
    return p;
}

std::vector<int> Involution::fixed_points() const {
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [i, j] : arcs) used[i] = used[j] = true;
    std::vector<int> out;
    for (int p = 1; p <= n; ++p)
        if (!used[p]) out.push_back(p);
    return out;
}

std::size_t InvolutionHash::operator()(const Involution& s) const {
    std::size_t h = std::hash<int>{}(s.n);
    for (const auto& [i, j] : s.arcs) {
        h = h * 1000003u + static_cast<std::size_t>(i);
        h = h * 1000003u + static_cast<std::size_t>(j);
    }
    return h;
}

Involution involution_from_arcs(int n, std::vector<Arc> arcs) {
    if (n < 1) throw OutOfRange("n must be positive, got " + std::to_string(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (auto& [i, j] : arcs) {
        if (i == j) throw SelfArc("arc (" + std::to_string(i) + "," + std::to_string(j) + ") pairs a point with itself");
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n)
            throw OutOfRange("arc (" + std::to_string(i) + "," + std::to_string(j) + ") leaves 1.." + std::to_string(n));
        for (int p : {i, j}) {
            if (used[p]) throw DuplicateEndpoint("point " + std::to_string(p) + " used by two arcs");
            used[p] = true;
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return Involution{n, std::move(arcs)};
}

std::vector<Involution> enumerate_involutions(int n, std::optional<int> k, int cap) {
    if (n < 1) throw OutOfRange("n must be positive, got " + std::to_string(n));
    if (n > cap)
        throw ResourceCap("enumeration over n=" + std::to_string(n) + " points exceeds cap " + std::to_string(cap));
    if (k && (*k < 0 || 2 * *k > n)) return {};

    std::vector<Involution> out;
    std::vector<Arc> arcs;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    // Smallest free point is either fixed or paired with a larger free point.
    std::function<void(int)> rec = [&](int p) {
        while (p <= n && used[p]) ++p;
        if (p > n) {
            if (!k || static_cast<int>(arcs.size()) == *k) {
                auto sorted = arcs;
                std::sort(sorted.begin(), sorted.end());
                out.push_back(Involution{n, std::move(sorted)});
            }
            return;
        }
        if (k && static_cast<int>(arcs.size()) > *k) return;
        rec(p + 1); // p fixed
        for (int q = p + 1; q <= n; ++q) {
            if (used[q]) continue;
            used[p] = used[q] = true;
            arcs.emplace_back(p, q);
            rec(p + 1);
            arcs.pop_back();
            used[p] = used[q] = false;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

PatternStats pattern_stats(const Involution& sigma) {
    PatternStats st;
    st.length = sigma.length();
    const auto& a = sigma.arcs;
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = s + 1; t < a.size(); ++t) {
            // a[s].first < a[t].first always holds in canonical order
            if (a[s].second > a[t].first && a[s].second < a[t].second) ++st.crossings;
        }
    st.fixed = sigma.fixed_points();
    for (int p : st.fixed) {
        int fp = static_cast<int>(over_point(sigma, p).size());
        st.per_point_fixed.push_back(fp);
        st.fixed_under += fp;
    }
    return st;
}

int q_of_arc(const Involution& sigma, const Arc& arc) {
    int q = 0;
    for (const auto& [i, j] : sigma.arcs) {
        if (i < arc.first && j < arc.second) ++q; // starts left, ends left
        if (j < arc.first) ++q;                   // lies entirely left
    }
    return q;
}

int dim_via_q(const Involution& sigma) {
    int k = sigma.length();
    int d = k * sigma.n;
    for (const auto& [i, j] : sigma.arcs) d -= (j - i) + q_of_arc(sigma, {i, j});
    return d;
}

int dim_via_pattern(const Involution& sigma) {
    auto st = pattern_stats(sigma);
    return st.length * (sigma.n - st.length) - st.crossings - st.fixed_under;
}

ZeroOneMatrix matrix_N(const Involution& sigma) {
    ZeroOneMatrix m;
    m.n = sigma.n;
    m.entries.assign(sigma.n, std::vector<int>(sigma.n, 0));
    for (const auto& [i, j] : sigma.arcs) m.entries[i - 1][j - 1] = 1;
    return m;
}

std::vector<Arc> external_arcs(const Involution& sigma) {
    std::vector<Arc> out;
    for (const auto& arc : sigma.arcs)
        if (over_arcs(sigma, arc).empty()) out.push_back(arc);
    return out;
}

std::vector<Arc> external_max_arcs(const Involution& sigma) {
    int free = sigma.n - 2 * sigma.length();
    std::vector<Arc> out;
    for (const auto& arc : external_arcs(sigma))
        if (f_prime(sigma, arc) == free) out.push_back(arc);
    return out;
}

int f_prime(const Involution& sigma, const Arc& arc) {
    int count = 0;
    for (int p : sigma.fixed_points())
        if (arc.first < p && p < arc.second) ++count;
    return count;
}

std::vector<Arc> over_arcs(const Involution& sigma, const Arc& arc) {
    std::vector<Arc> out;
    for (const auto& [i, j] : sigma.arcs)
        if (i < arc.first && arc.second < j) out.emplace_back(i, j);
    return out;
}

std::vector<Arc> under_arcs(const Involution& sigma, const Arc& arc) {
    std::vector<Arc> out;
    for (const auto& [i, j] : sigma.arcs)
        if (arc.first < i && j < arc.second) out.emplace_back(i, j);
    return out;
}

std::vector<Arc> over_point(const Involution& sigma, int p) {
    std::vector<Arc> out;
    for (const auto& [i, j] : sigma.arcs)
        if (i < p && p < j) out.emplace_back(i, j);
    return out;
}

Involution project(const Involution& sigma, int i, int j) {
    Involution out;
    out.n = sigma.n;
    for (const auto& arc : sigma.arcs)
        if (i <= arc.first && arc.second <= j) out.arcs.push_back(arc);
    return out;
}

} // namespace linkpat

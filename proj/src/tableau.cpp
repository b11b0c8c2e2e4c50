#include "linkpat/tableau.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace linkpat {

namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

// ballot check: every prefix of 1..n has #col2 <= #col1, equivalent to the
// rowwise condition col1[s] < col2[s]
bool standard(const std::vector<int>& col1, const std::vector<int>& col2) {
    for (std::size_t s = 0; s < col2.size(); ++s)
        if (s >= col1.size() || col1[s] >= col2[s]) return false;
    return true;
}

} // namespace

TwoColumnTableau tableau_from_columns(int n, std::vector<int> col1, std::vector<int> col2) {
    if (n < 1) throw ParseError("tableau needs n >= 1, got " + std::to_string(n));
    if (static_cast<int>(col1.size() + col2.size()) != n)
        throw ParseError("columns hold " + std::to_string(col1.size() + col2.size()) + " entries, expected " +
                         std::to_string(n));
    for (const auto* col : {&col1, &col2})
        if (std::adjacent_find(col->begin(), col->end(), std::greater_equal<int>()) != col->end())
            throw ParseError("columns must be strictly increasing");
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto* col : {&col1, &col2})
        for (int x : *col) {
            if (x < 1 || x > n) throw ParseError("entry " + std::to_string(x) + " leaves 1.." + std::to_string(n));
            if (used[x]) throw ParseError("entry " + std::to_string(x) + " appears twice");
            used[x] = true;
        }
    if (2 * static_cast<int>(col2.size()) > n)
        throw ParseError("column 2 longer than column 1");
    if (!standard(col1, col2)) throw ParseError("rowwise condition col1[s] < col2[s] violated");
    return TwoColumnTableau{n, std::move(col1), std::move(col2)};
}

std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k) {
    std::vector<TwoColumnTableau> out;
    if (n < 1 || k < 0 || 2 * k > n) return out;
    std::vector<int> col1, col2;
    std::function<void(int)> rec = [&](int p) {
        if (p > n) {
            if (static_cast<int>(col2.size()) == k) out.push_back({n, col1, col2});
            return;
        }
        if (static_cast<int>(col1.size()) < n - k) {
            col1.push_back(p);
            rec(p + 1);
            col1.pop_back();
        }
        if (static_cast<int>(col2.size()) < k && col2.size() < col1.size()) {
            col2.push_back(p);
            rec(p + 1);
            col2.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

Involution sigma_of_tableau(const TwoColumnTableau& t) {
    std::vector<Arc> arcs;
    std::vector<int> pool = t.col1; // ascending
    for (int j : t.col2) {
        // largest unused column-1 entry below j; standardness guarantees one
        auto it = std::lower_bound(pool.begin(), pool.end(), j);
        if (it == pool.begin()) throw Error("internal: tableau not standard");
        --it;
        arcs.emplace_back(*it, j);
        pool.erase(it);
    }
    return involution_from_arcs(t.n, std::move(arcs));
}

TwoColumnTableau tableau_of_sigma(const Involution& sigma) {
    auto st = pattern_stats(sigma);
    if (st.crossings != 0 || st.fixed_under != 0)
        throw NotMaximal("orbit is not maximal: " + std::to_string(st.crossings) + " crossings, " +
                         std::to_string(st.fixed_under) + " covered fixed points");
    TwoColumnTableau t;
    t.n = sigma.n;
    for (const auto& [i, j] : sigma.arcs) t.col2.push_back(j);
    std::sort(t.col2.begin(), t.col2.end());
    for (int p = 1; p <= sigma.n; ++p)
        if (!contains(t.col2, p)) t.col1.push_back(p);
    return t;
}

std::vector<TwoColumnTableau> closure_tableaux(const TwoColumnTableau& t) {
    std::vector<TwoColumnTableau> out;
    const auto& j = t.col2; // ascending: j[0] < ... < j[k-1]
    const int k = t.k();
    for (int i = 1; i <= k; ++i) {
        bool eligible = true;
        for (int s = i + 1; s <= k && eligible; ++s)
            eligible = j[s - 1] - j[i - 1] >= 2 * (s - i);
        if (!eligible) continue;
        TwoColumnTableau moved;
        moved.n = t.n;
        moved.col1 = t.col1;
        moved.col1.insert(std::upper_bound(moved.col1.begin(), moved.col1.end(), j[i - 1]), j[i - 1]);
        for (int s = 0; s < k; ++s)
            if (s != i - 1) moved.col2.push_back(j[s]);
        out.push_back(std::move(moved));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> descent_set(const TwoColumnTableau& t) {
    std::vector<int> out;
    for (int i : t.col1)
        if (i + 1 <= t.n && contains(t.col2, i + 1)) out.push_back(i);
    return out;
}

std::optional<TwoColumnTableau> tableau_swap(const TwoColumnTableau& t, int i, int j) {
    if (!contains(t.col1, i) || !contains(t.col2, j))
        throw OutOfRange("swap wants " + std::to_string(i) + " in column 1 and " + std::to_string(j) +
                         " in column 2");
    TwoColumnTableau s;
    s.n = t.n;
    for (int x : t.col1) s.col1.push_back(x == i ? j : x);
    for (int x : t.col2) s.col2.push_back(x == j ? i : x);
    std::sort(s.col1.begin(), s.col1.end());
    std::sort(s.col2.begin(), s.col2.end());
    if (!standard(s.col1, s.col2)) return std::nullopt;
    return s;
}

bool swap_shape_ok(const TwoColumnTableau& t, int i, int j) {
    if (!contains(t.col1, i) || !contains(t.col2, j))
        throw OutOfRange("swap wants " + std::to_string(i) + " in column 1 and " + std::to_string(j) +
                         " in column 2");
    if (j < i) return true;
    auto col2_upto = [&](int m) {
        return static_cast<int>(std::upper_bound(t.col2.begin(), t.col2.end(), m) - t.col2.begin());
    };
    int kp = col2_upto(i), kpp = col2_upto(j);
    return i - kp > kp + 1 && j - kpp > kpp;
}

std::optional<TwoColumnTableau> u_move(const TwoColumnTableau& t, int i) {
    if (i < 1 || i >= t.n)
        throw OutOfRange("u-move position " + std::to_string(i) + " outside 1.." + std::to_string(t.n - 1));
    bool i_right = contains(t.col2, i);
    bool next_right = contains(t.col2, i + 1);
    if (!i_right && next_right) throw DescentAtI("position " + std::to_string(i) + " is a descent");
    auto sigma = sigma_of_tableau(t);
    if (i_right && next_right) return tableau_swap(t, sigma.image(i), i);
    if (i_right) return tableau_swap(t, i + 1, i);
    int partner = sigma.image(i + 1);
    if (partner == i + 1) return std::nullopt; // i and i+1 both fixed
    return tableau_swap(t, i + 1, partner);
}

int two_column_orbit_dim(int n, int k) { return 2 * k * (n - k); }

} // namespace linkpat

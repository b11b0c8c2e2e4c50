#pragma once
//! Two-column standard Young tableaux of shape (n-k,k)*. Each one labels a
//! maximal-dimension orbit (no crossings, no covered fixed points) through the
//! greedy matching sigma_T, and an orbital variety. Column moves on tableaux
//! mirror boundary and intersection operations on the varieties.

#include <optional>
#include <vector>

#include "linkpat/involution.hpp"

namespace linkpat {

struct TwoColumnTableau {
    int n = 0;
    std::vector<int> col1; // ascending, length n-k
    std::vector<int> col2; // ascending, length k; col1[s] < col2[s] rowwise

    int k() const { return static_cast<int>(col2.size()); }

    friend bool operator==(const TwoColumnTableau& a, const TwoColumnTableau& b) {
        return a.n == b.n && a.col1 == b.col1 && a.col2 == b.col2;
    }
    friend bool operator<(const TwoColumnTableau& a, const TwoColumnTableau& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.col1 < b.col1;
    }
};

// Validates: the two columns partition 1..n, each ascending, and every prefix
// of 1..n holds at least as many column-1 entries as column-2 entries (the
// rowwise condition). Throws ParseError on any violation.
TwoColumnTableau tableau_from_columns(int n, std::vector<int> col1, std::vector<int> col2);

// All tableaux of shape (n-k,k)*, canonical order.
std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k);

// Greedy matching: ascending right ends j_s from column 2, each paired with
// the largest unused column-1 entry below it. Crossing- and cover-free.
Involution sigma_of_tableau(const TwoColumnTableau& t);

// Inverse: column 2 = sorted right endpoints. Throws NotMaximal when sigma
// has a crossing or a covered fixed point.
TwoColumnTableau tableau_of_sigma(const Involution& sigma);

// The tableaux T<j_i>: j_i moved from column 2 into column 1, for exactly the
// i passing the gap condition (i = k, or j_s - j_i >= 2(s-i) for all s > i).
// These label the boundary components of the orbital variety.
std::vector<TwoColumnTableau> closure_tableaux(const TwoColumnTableau& t);

// {i : i in column 1, i+1 in column 2}; equivalently the i with (i,i+1) an
// arc of sigma_T.
std::vector<int> descent_set(const TwoColumnTableau& t);

// Interchange the columns of i (from column 1) and j (from column 2); empty
// when the result is not standard. Always succeeds for j < i.
std::optional<TwoColumnTableau> tableau_swap(const TwoColumnTableau& t, int i, int j);

// The closed-form validity test for the swap: automatic for j < i, prefix
// balance conditions at i and j otherwise. Agrees with tableau_swap on the
// partner-pair swaps u_move performs; not a general-pair criterion.
bool swap_shape_ok(const TwoColumnTableau& t, int i, int j);

// The four-case move producing a tableau with i in its descent set, or
// nothing when i and i+1 are both fixed. Throws DescentAtI / OutOfRange.
std::optional<TwoColumnTableau> u_move(const TwoColumnTableau& t, int i);

// dim of the nilpotent-orbit closure the varieties live in: 2k(n-k).
int two_column_orbit_dim(int n, int k);

} // namespace linkpat

#pragma once
//! Involutions in S_n with all cycles of length <= 2, stored as their link
//! patterns: the sorted list of arcs (i,j), i < j, over points 1..n. These are
//! exactly the parameters of B-orbits of square-zero strictly upper-triangular
//! matrices; pattern statistics give orbit dimensions in closed form.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linkpat/errors.hpp"

namespace linkpat {

using Arc = std::pair<int, int>;

// Enumeration functions refuse n beyond this unless the caller raises the cap.
inline constexpr int default_enum_cap = 12;

struct Involution {
    int n = 0;
    std::vector<Arc> arcs; // each (i,j) with i < j, pairwise disjoint, sorted

    int length() const { return static_cast<int>(arcs.size()); }

    // Partner of p, or p itself when p is a fixed point.
    int image(int p) const;
    bool is_fixed(int p) const { return image(p) == p; }

    std::vector<int> fixed_points() const;

    friend bool operator==(const Involution& a, const Involution& b) {
        return a.n == b.n && a.arcs == b.arcs;
    }
    friend bool operator<(const Involution& a, const Involution& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.arcs < b.arcs;
    }
};

struct InvolutionHash {
    std::size_t operator()(const Involution& s) const;
};

struct PatternStats {
    int length = 0;        // number of arcs
    int crossings = 0;     // pairs i < i' < j < j' of arcs (i,j), (i',j')
    int fixed_under = 0;   // total count of (fixed point, covering arc) pairs
    std::vector<int> per_point_fixed; // f_p for each fixed point p, in point order
    std::vector<int> fixed; // the fixed points themselves, increasing
};

struct ZeroOneMatrix {
    int n = 0;
    std::vector<std::vector<int>> entries; // n x n, row-major, 0-based
};

// Validates and canonicalizes an arc list: endpoints in 1..n, no self arcs,
// no endpoint reused. Arcs may arrive in any order and orientation.
Involution involution_from_arcs(int n, std::vector<Arc> arcs);

// All involutions on n points (of length k when given), in canonical sorted
// order. Throws ResourceCap when n exceeds cap.
std::vector<Involution> enumerate_involutions(int n, std::optional<int> k = std::nullopt,
                                              int cap = default_enum_cap);

PatternStats pattern_stats(const Involution& sigma);

// q_{(i,j)} = #{arcs (i',j') : i' < i and j' < j} + #{arcs ending left of i}.
// The arc argument must belong to sigma.
int q_of_arc(const Involution& sigma, const Arc& arc);

// dim B_sigma = k*n - sum (j_s - i_s) - sum q_{(i_s,j_s)}.
int dim_via_q(const Involution& sigma);

// dim B_sigma = l*(n-l) - crossings - fixed_under.
int dim_via_pattern(const Involution& sigma);

// The 0/1 matrix with a one at (i,j) per arc; strictly upper, squares to zero.
ZeroOneMatrix matrix_N(const Involution& sigma);

// Arcs with no arc strictly over them (no (i',j') with i' < i, j < j').
std::vector<Arc> external_arcs(const Involution& sigma);

// External arcs covering every fixed point, i.e. f' equals n - 2*length.
std::vector<Arc> external_max_arcs(const Involution& sigma);

// --- helpers shared with the order/cover machinery ---

// Number of fixed points strictly inside (i,j).
int f_prime(const Involution& sigma, const Arc& arc);

// Arcs of sigma strictly over `arc`: (i',j') with i' < i and j < j'.
std::vector<Arc> over_arcs(const Involution& sigma, const Arc& arc);

// Arcs of sigma strictly under `arc`: (i',j') with i < i' and j' < j.
std::vector<Arc> under_arcs(const Involution& sigma, const Arc& arc);

// Arcs of sigma strictly over the point p.
std::vector<Arc> over_point(const Involution& sigma, int p);

// Restriction to the window [i,j]: keeps the arcs contained in it, original
// labels, same n.
Involution project(const Involution& sigma, int i, int j);

} // namespace linkpat

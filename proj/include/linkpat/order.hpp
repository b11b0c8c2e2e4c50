#pragma once
//! Closure order on orbits via rank matrices. Entry (i,j) of R_sigma counts
//! the arcs contained in the window [i,j]; orbit closure containment is exactly
//! entrywise <= of these matrices, and membership of an arbitrary matrix in
//! the set of achievable rank matrices is decidable by local conditions.

#include <vector>

#include "linkpat/involution.hpp"

namespace linkpat {

struct RankMatrix {
    int n = 0;
    std::vector<std::vector<int>> entries; // n x n, row-major, 0-based storage

    // 1-based accessor; out-of-range indices read as 0, which matches the
    // convention that empty windows hold no arcs.
    int at(int i, int j) const {
        if (i < 1 || j < 1 || i > n || j > n) return 0;
        return entries[i - 1][j - 1];
    }

    friend bool operator==(const RankMatrix& a, const RankMatrix& b) {
        return a.n == b.n && a.entries == b.entries;
    }
};

RankMatrix rank_matrix(const Involution& sigma);

// Entrywise comparison of rank matrices: sigma_a lies in the closure of
// sigma_b's orbit. Throws SizeMismatch when the two live over different n.
bool leq(const Involution& a, const Involution& b);
bool leq_matrices(const RankMatrix& a, const RankMatrix& b);

// Whether an arbitrary integer matrix is the rank matrix of some involution,
// decided by the local jump conditions (no enumeration).
bool is_rank2_matrix(const RankMatrix& r);

// All sigma' with sigma' <= sigma, canonical order. BFS over cover moves;
// the fast path. Throws ResourceCap past the cap.
std::vector<Involution> closure(const Involution& sigma, int cap = default_enum_cap);

// Same set by brute force: enumerate S_n^2 and filter by leq. The oracle
// path, kept shipping so the two can be cross-checked at any time.
std::vector<Involution> closure_by_filter(const Involution& sigma, int cap = default_enum_cap);

} // namespace linkpat

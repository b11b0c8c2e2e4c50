#pragma once
//! Cover moves in the closure order. A cover of sigma is reached either by
//! deleting an external arc over all fixed points (dropping rank by one) or by
//! one of four rank-preserving rearrangements: shrinking an arc endpoint onto a
//! fixed point, crossing an arc with one entirely to its left, or crossing it
//! with an immediately surrounding one.

#include <optional>
#include <vector>

#include "linkpat/involution.hpp"

namespace linkpat {

enum class MoveKind { shrink_left, shrink_right, cross_left, cross_nested };

// Where a d-move came from: the arc it acted on, plus either the fixed point
// an endpoint moved to (shrink) or the partner arc (cross).
struct MoveTag {
    MoveKind kind;
    Arc arc;
    Arc partner{0, 0}; // cross moves only
    int to = 0;        // shrink moves only

    friend bool operator==(const MoveTag& a, const MoveTag& b) {
        return a.kind == b.kind && a.arc == b.arc && a.partner == b.partner && a.to == b.to;
    }
};

struct DMove {
    Involution result;
    std::vector<MoveTag> tags; // all provenances producing this result

    friend bool operator<(const DMove& a, const DMove& b) { return a.result < b.result; }
};

struct CoverSet {
    std::vector<Involution> n_moves; // external-arc deletions, length k-1
    std::vector<DMove> d_moves;      // rank-preserving moves, length k
};

// Arc deletions: one per external arc, canonical order.
std::vector<Involution> cover_N(const Involution& sigma);

// The four d-move families, deduplicated by result with provenance kept.
std::vector<DMove> cover_D(const Involution& sigma);

// Full cover: d-moves plus deletions of external-max arcs. Every element
// parameterizes a codimension-1 orbit in the closure.
CoverSet cover_C(const Involution& sigma);

// Arcs (i_s,j_s) left of `arc` = (i,j) (j_s < i) such that every point of
// [j_s+1, i-1] is an endpoint of an arc contained in [i_s, j]; these are the
// partners admissible for a cross_left move on `arc`.
std::vector<Arc> l_arcs(const Involution& sigma, const Arc& arc);

// Arcs immediately over `arc`: members of over_arcs with no arc strictly
// between the two; partners for a cross_nested move.
std::vector<Arc> ov_arcs(const Involution& sigma, const Arc& arc);

// Unique minimal element of the length-k stratum, found by scan. Throws
// NotUnique if the scan contradicts uniqueness (an implementation bug).
Involution minimal_involution(int n, int k, int cap = default_enum_cap);

// The minimum of {tau of length k+1 : tau > sigma}: delete the external-max
// arcs and re-thread them through the outermost fixed points. Throws
// NoFixedPoints when fewer than two fixed points are available.
Involution sigma_bar_next(const Involution& sigma);

} // namespace linkpat

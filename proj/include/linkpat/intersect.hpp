#pragma once
//! Pairwise intersections of orbit closures. The entrywise minimum of two rank
//! matrices bounds the intersection; its maximal involutions are the component
//! parameters. Meander statistics decide codimension-1 and reducibility
//! questions for orbital varieties without enumerating anything.

#include <optional>
#include <vector>

#include "linkpat/meander.hpp"
#include "linkpat/order.hpp"
#include "linkpat/tableau.hpp"

namespace linkpat {

struct IntersectionReport {
    RankMatrix min_matrix;
    std::vector<Involution> components; // maximal sigma'' below both inputs
    std::vector<int> dims;              // dim per component
    std::vector<int> codims_a;          // dim(a) - dim(component)
    std::vector<int> codims_b;
    bool irreducible = false;           // exactly one component
};

// Entrywise minimum of the two rank matrices. Throws SizeMismatch.
RankMatrix intersection_matrix(const Involution& a, const Involution& b);

// Components of the intersection of the two closures: the maximal involutions
// whose rank matrix fits under the minimum, over all lengths up to
// min(len a, len b), or within one length stratum when restrict_k is given.
// Codims are taken against the dims of the input orbits.
IntersectionReport intersect(const Involution& a, const Involution& b,
                             std::optional<int> restrict_k = std::nullopt,
                             int cap = default_enum_cap);

// codim 1 test for two orbital varieties of the same shape: the meander of
// sigma_S, sigma_T must be even with exactly k-1 loops. Throws ShapeMismatch.
bool codim1_criterion(const TwoColumnTableau& s, const TwoColumnTableau& t);

// Loop count r of an even meander (the inner product of the link-pattern
// basis elements is delta^r); nothing when the meander is odd.
std::optional<int> tl_inner_exponent(const TwoColumnTableau& s, const TwoColumnTableau& t);

// k - r, the codimension of the intersection on the two-row (transposed)
// side; nothing when odd. A comparison oracle, not the two-column codim.
std::optional<int> fung_codim(const TwoColumnTableau& s, const TwoColumnTableau& t);

// Minimal segments [i,j] where the min matrix holds value 1 and every proper
// subsegment holds 0, ordered by left endpoint. Throws SizeMismatch.
std::vector<std::pair<int, int>> one_segments(const Involution& a, const Involution& b);

// Sufficient reducibility test: consecutive 1-segments that touch, or overlap
// with min-matrix value 1 across their hull. Throws ShapeMismatch.
bool reducibility_sufficient(const TwoColumnTableau& s, const TwoColumnTableau& t);

} // namespace linkpat

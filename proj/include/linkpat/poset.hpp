#pragma once
//! Hasse diagram of the closure order over all of S_n^2, or over one length
//! stratum. Nodes cache dimension and rank matrix; edges point from the larger
//! orbit to the covered one and always drop dimension by exactly one.

#include <optional>
#include <utility>
#include <vector>

#include "linkpat/order.hpp"

namespace linkpat {

struct OrbitPoset {
    struct Node {
        Involution sigma;
        int dim = 0;
        RankMatrix rank;
    };

    int n = 0;
    std::optional<int> k;             // stratum filter, if any
    std::vector<Node> nodes;          // canonical involution order
    std::vector<std::pair<int, int>> hasse_edges; // (parent index, child index)
};

// Builds the diagram by running the cover computation at every node. With a
// stratum filter only the rank-preserving moves appear (deleting an arc leaves
// the stratum, and same-length covers are exactly the d-moves).
OrbitPoset build_poset(int n, std::optional<int> k = std::nullopt, int cap = default_enum_cap);

} // namespace linkpat

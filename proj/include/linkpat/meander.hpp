#pragma once
//! Meanders: draw one link pattern above the axis and another below, then walk
//! the alternating curves. Closed walks are loops, open ones intervals; their
//! count and parity control how two orbital-variety closures intersect.

#include <vector>

#include "linkpat/involution.hpp"

namespace linkpat {

enum class ComponentKind { loop, interval };

struct MeanderComponent {
    ComponentKind kind = ComponentKind::interval;
    int length = 0;                          // number of arcs on the walk
    std::vector<std::pair<char, Arc>> arcs;  // ('t' or 'b', arc) in walk order
};

struct Meander {
    int n = 0;
    Involution top;
    Involution bottom;
    std::vector<MeanderComponent> components; // ordered by smallest point touched
    std::vector<int> isolated;                // fixed in both patterns
};

struct MeanderClass {
    bool even = false;  // no odd intervals
    int loops = 0;
    int odd_intervals = 0;
    int even_intervals = 0; // isolated points count as length-0 even intervals
};

// Throws SizeMismatch when the patterns live over different n.
Meander build_meander(const Involution& top, const Involution& bottom);

MeanderClass classify_meander(const Meander& m);

} // namespace linkpat

#pragma once
//! Graphviz renderings: the orbit poset as a digraph ranked by dimension, and
//! a meander as a two-sided chord diagram.

#include <string>

#include "linkpat/meander.hpp"
#include "linkpat/poset.hpp"

namespace linkpat {

// Nodes labeled "(1,3)(2,6) d=8", edges from larger orbit to covered one,
// one rank row per dimension.
std::string poset_to_dot(const OrbitPoset& poset);

// Points on a line; top arcs solid above, bottom arcs dashed below.
std::string meander_to_dot(const Meander& m);

} // namespace linkpat

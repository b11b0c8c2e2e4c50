#pragma once
//! JSON (de)serialization and the text input formats of the command-line
//! tool. All emitters produce objects whose keys iterate alphabetically, so
//! dumps are byte-deterministic.

#include <string>

#include <json.hpp>

#include "linkpat/covers.hpp"
#include "linkpat/intersect.hpp"
#include "linkpat/meander.hpp"
#include "linkpat/poset.hpp"
#include "linkpat/tableau.hpp"

namespace linkpat {

nlohmann::json involution_to_json(const Involution& sigma);
Involution involution_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const TwoColumnTableau& t);
TwoColumnTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json rank_matrix_to_json(const RankMatrix& r);

nlohmann::json cover_to_json(const Involution& sigma, const CoverSet& cover);

nlohmann::json poset_to_json(const OrbitPoset& poset);
OrbitPoset poset_from_json(const nlohmann::json& j);

nlohmann::json meander_to_json(const Meander& m);

nlohmann::json intersection_to_json(const IntersectionReport& rep);

// "(1,3)(2,6)(4,7)", or "()" for the identity.
std::string cyclic_form(const Involution& sigma);

// Inline syntax: "1-3,2-6,4-7@7" lists arcs before the point count; "@5" is
// the identity on 5 points. Throws ParseError carrying the byte offset.
Involution parse_inline_arcs(const std::string& text);

// Accepts inline syntax, a JSON object string, or a path to a JSON file.
Involution parse_involution_spec(const std::string& spec);

// Accepts a JSON object string or a path to a JSON file.
TwoColumnTableau parse_tableau_spec(const std::string& spec);

} // namespace linkpat

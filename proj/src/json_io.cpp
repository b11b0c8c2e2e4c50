#include "linkpat/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace linkpat {

namespace {

using nlohmann::json;

// shared guards for hand-rolled object shapes

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<Arc> arc_list(const json& v) {
    if (!v.is_array()) throw ParseError("\"arcs\" must be an array");
    std::vector<Arc> out;
    for (const auto& pair : v) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError("each arc must be a pair of integers");
        out.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return out;
}

json arcs_to_json(const std::vector<Arc>& arcs) {
    json out = json::array();
    for (const auto& [i, j] : arcs) out.push_back(json::array({i, j}));
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

} // namespace

json involution_to_json(const Involution& sigma) {
    return json{{"arcs", arcs_to_json(sigma.arcs)}, {"n", sigma.n}};
}

Involution involution_from_json(const json& j) {
    try {
        return involution_from_arcs(int_field(j, "n"), arc_list(field(j, "arcs")));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json tableau_to_json(const TwoColumnTableau& t) {
    return json{{"col1", t.col1}, {"col2", t.col2}, {"n", t.n}};
}

TwoColumnTableau tableau_from_json(const json& j) {
    return tableau_from_columns(int_field(j, "n"), int_list(field(j, "col1"), "\"col1\""),
                                int_list(field(j, "col2"), "\"col2\""));
}

json rank_matrix_to_json(const RankMatrix& r) {
    json rows = json::array();
    for (const auto& row : r.entries) rows.push_back(row);
    return rows;
}

json cover_to_json(const Involution& sigma, const CoverSet& cover) {
    json n_moves = json::array();
    for (const auto& s : cover.n_moves) n_moves.push_back(involution_to_json(s));
    json d_moves = json::array();
    for (const auto& m : cover.d_moves) {
        json tags = json::array();
        for (const auto& tag : m.tags) {
            switch (tag.kind) {
                case MoveKind::shrink_left:
                    tags.push_back(json{{"arc", json::array({tag.arc.first, tag.arc.second})},
                                        {"kind", "shrink-left"},
                                        {"to", tag.to}});
                    break;
                case MoveKind::shrink_right:
                    tags.push_back(json{{"arc", json::array({tag.arc.first, tag.arc.second})},
                                        {"kind", "shrink-right"},
                                        {"to", tag.to}});
                    break;
                case MoveKind::cross_left:
                    tags.push_back(json{{"arc", json::array({tag.arc.first, tag.arc.second})},
                                        {"kind", "cross-left"},
                                        {"with", json::array({tag.partner.first, tag.partner.second})}});
                    break;
                case MoveKind::cross_nested:
                    tags.push_back(json{{"arc", json::array({tag.arc.first, tag.arc.second})},
                                        {"kind", "cross-nested"},
                                        {"with", json::array({tag.partner.first, tag.partner.second})}});
                    break;
            }
        }
        d_moves.push_back(json{{"result", involution_to_json(m.result)}, {"tags", tags}});
    }
    return json{{"d_moves", d_moves}, {"n_moves", n_moves}, {"sigma", involution_to_json(sigma)}};
}

json poset_to_json(const OrbitPoset& poset) {
    json nodes = json::array();
    for (const auto& node : poset.nodes)
        nodes.push_back(json{{"arcs", arcs_to_json(node.sigma.arcs)}, {"dim", node.dim}});
    json edges = json::array();
    for (const auto& [p, c] : poset.hasse_edges) edges.push_back(json::array({p, c}));
    json out{{"edges", edges}, {"n", poset.n}, {"nodes", nodes}};
    out["k"] = poset.k ? json(*poset.k) : json(nullptr);
    return out;
}

OrbitPoset poset_from_json(const json& j) {
    OrbitPoset poset;
    poset.n = int_field(j, "n");
    const json& k = field(j, "k");
    if (k.is_number_integer())
        poset.k = k.get<int>();
    else if (!k.is_null())
        throw ParseError("key \"k\" must be an integer or null");
    const json& nodes = field(j, "nodes");
    if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
    for (const auto& entry : nodes) {
        Involution sigma = involution_from_arcs(poset.n, arc_list(field(entry, "arcs")));
        int dim = int_field(entry, "dim");
        poset.nodes.push_back({sigma, dim, rank_matrix(sigma)});
    }
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    int count = static_cast<int>(poset.nodes.size());
    for (const auto& pair : edges) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
            throw ParseError("each edge must be a pair of node indices");
        int p = pair[0].get<int>(), c = pair[1].get<int>();
        if (p < 0 || c < 0 || p >= count || c >= count) throw ParseError("edge index out of range");
        poset.hasse_edges.emplace_back(p, c);
    }
    return poset;
}

json meander_to_json(const Meander& m) {
    json components = json::array();
    for (const auto& comp : m.components) {
        json arcs = json::array();
        for (const auto& [side, arc] : comp.arcs)
            arcs.push_back(json::array({std::string(1, side), json::array({arc.first, arc.second})}));
        components.push_back(json{{"arcs", arcs},
                                  {"kind", comp.kind == ComponentKind::loop ? "loop" : "interval"},
                                  {"length", comp.length}});
    }
    return json{{"bottom", involution_to_json(m.bottom)},
                {"components", components},
                {"isolated", m.isolated},
                {"n", m.n},
                {"top", involution_to_json(m.top)}};
}

json intersection_to_json(const IntersectionReport& rep) {
    json components = json::array();
    for (std::size_t s = 0; s < rep.components.size(); ++s)
        components.push_back(json{{"arcs", arcs_to_json(rep.components[s].arcs)},
                                  {"codim_a", rep.codims_a[s]},
                                  {"codim_b", rep.codims_b[s]},
                                  {"dim", rep.dims[s]}});
    return json{{"components", components},
                {"irreducible", rep.irreducible},
                {"min_matrix", rank_matrix_to_json(rep.min_matrix)}};
}

std::string cyclic_form(const Involution& sigma) {
    if (sigma.arcs.empty()) return "()";
    std::ostringstream out;
    for (const auto& [i, j] : sigma.arcs) out << '(' << i << ',' << j << ')';
    return out.str();
}

Involution parse_inline_arcs(const std::string& text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](const char* what) {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what, start);
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        skip_space();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };

    std::vector<Arc> arcs;
    skip_space();
    while (pos < text.size() && text[pos] != '@') {
        int i = read_int("arc endpoint");
        expect('-');
        int j = read_int("arc endpoint");
        arcs.emplace_back(i, j);
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect('@');
    int n = read_int("point count");
    skip_space();
    if (pos != text.size()) throw ParseError("trailing input", pos);
    try {
        return involution_from_arcs(n, std::move(arcs));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

namespace {

bool looks_like_json(const std::string& spec) {
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
    return false;
}

json load_spec_json(const std::string& spec) {
    if (looks_like_json(spec)) return parse_text(spec);
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open file \"" + spec + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

} // namespace

Involution parse_involution_spec(const std::string& spec) {
    if (!looks_like_json(spec) && spec.find('@') != std::string::npos) return parse_inline_arcs(spec);
    return involution_from_json(load_spec_json(spec));
}

TwoColumnTableau parse_tableau_spec(const std::string& spec) {
    return tableau_from_json(load_spec_json(spec));
}

} // namespace linkpat

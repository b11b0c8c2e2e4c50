// linkpat: orbit dimensions, closure order, orbital-variety intersections and
// meander analysis for square-zero upper-triangular matrices, driven by link
// patterns. See README.md for the command inventory.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linkpat/dot_export.hpp"
#include "linkpat/json_io.hpp"
#include "linkpat/version.hpp"

namespace {

using namespace linkpat;
using nlohmann::json;

// ---------------------------------------------------------------------------
// plumbing

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write \"" + out_path + "\"");
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string involution_line(const Involution& sigma) {
    std::ostringstream out;
    out << cyclic_form(sigma) << " d=" << dim_via_pattern(sigma);
    return out.str();
}

std::string matrix_block(const RankMatrix& r, const std::string& indent) {
    std::ostringstream out;
    for (const auto& row : r.entries) {
        out << indent;
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << "\n";
    }
    return out.str();
}

std::string tableau_line(const TwoColumnTableau& t) {
    std::ostringstream out;
    out << "col1=";
    for (std::size_t s = 0; s < t.col1.size(); ++s) out << (s ? "," : "") << t.col1[s];
    out << " col2=";
    for (std::size_t s = 0; s < t.col2.size(); ++s) out << (s ? "," : "") << t.col2[s];
    return out.str();
}

json involutions_to_json(const std::vector<Involution>& list) {
    json out = json::array();
    for (const auto& sigma : list) {
        json entry = involution_to_json(sigma);
        entry["dim"] = dim_via_pattern(sigma);
        out.push_back(entry);
    }
    return out;
}

std::string involutions_to_table(const std::vector<Involution>& list) {
    std::ostringstream out;
    for (const auto& sigma : list) out << involution_line(sigma) << "\n";
    return out.str();
}

// generic 1-segment chain test on a pair of involutions (the tableau-level
// operation reducibility_sufficient specializes this)
bool segments_chain(const RankMatrix& min, const std::vector<std::pair<int, int>>& segs) {
    for (std::size_t s = 0; s + 1 < segs.size(); ++s) {
        if (segs[s + 1].first == segs[s].second) return true;
        if (segs[s + 1].first < segs[s].second && min.at(segs[s].first, segs[s + 1].second) == 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// poset cache

std::string cache_path(const std::string& dir, int n, std::optional<int> k) {
    std::ostringstream name;
    name << "poset-n" << n << "-k" << (k ? std::to_string(*k) : "all") << ".json";
    return (std::filesystem::path(dir) / name.str()).string();
}

std::optional<OrbitPoset> load_cached_poset(const std::string& path, int n, std::optional<int> k) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt; // no cache entry; not an error
    try {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        json j = json::parse(buffer.str());
        if (!j.contains("version") || j["version"] != library_version)
            throw CacheCorrupt("version mismatch");
        OrbitPoset poset = poset_from_json(j);
        if (poset.n != n || poset.k != k) throw CacheCorrupt("cache key mismatch");
        return poset;
    } catch (const std::exception& e) {
        std::cerr << "cache: ignoring " << path << " (" << e.what() << "); rebuilding\n";
        return std::nullopt;
    }
}

void store_cached_poset(const std::string& path, const OrbitPoset& poset) {
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cache: cannot write " << path << "\n";
        return;
    }
    json j = poset_to_json(poset);
    j["version"] = library_version;
    out << dump(j);
}

// ---------------------------------------------------------------------------
// verify: the oracle suite

struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
};

CheckResult check_dim_equivalence(int n_max, int cap, bool mutate) {
    CheckResult res{"dim-equivalence"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& sigma : enumerate_involutions(n, std::nullopt, cap)) {
            ++res.cases;
            auto st = pattern_stats(sigma);
            int crossings = st.crossings + (mutate ? 1 : 0);
            int by_pattern = st.length * (n - st.length) - crossings - st.fixed_under;
            if (by_pattern != dim_via_q(sigma)) ++res.failures;
        }
    return res;
}

CheckResult check_rank_membership(int n_max, int cap) {
    CheckResult res{"rank-membership"};
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
        std::set<std::vector<int>> achievable;
        for (const auto& sigma : enumerate_involutions(n, std::nullopt, cap)) {
            auto r = rank_matrix(sigma);
            std::vector<int> flat;
            for (const auto& row : r.entries) flat.insert(flat.end(), row.begin(), row.end());
            achievable.insert(flat);
        }
        // every strictly-upper matrix with entries up to n/2
        int slots = n * (n - 1) / 2, top = n / 2;
        std::vector<int> values(slots, 0);
        while (true) {
            RankMatrix r;
            r.n = n;
            r.entries.assign(n, std::vector<int>(n, 0));
            int s = 0;
            std::vector<int> flat;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) r.entries[i][j] = values[s++];
            for (const auto& row : r.entries) flat.insert(flat.end(), row.begin(), row.end());
            ++res.cases;
            if (is_rank2_matrix(r) != (achievable.count(flat) > 0)) ++res.failures;
            int carry = 0;
            while (carry < slots && ++values[carry] > top) values[carry++] = 0;
            if (carry == slots) break;
        }
    }
    return res;
}

CheckResult check_cover_codim(int n_max, int cap) {
    CheckResult res{"cover-codim"};
    for (int n = 1; n <= std::min(n_max, 7); ++n)
        for (const auto& sigma : enumerate_involutions(n, std::nullopt, cap)) {
            ++res.cases;
            auto fast = closure(sigma, cap);
            auto slow = closure_by_filter(sigma, cap);
            bool ok = fast == slow;
            std::vector<Involution> expected;
            int below = dim_via_pattern(sigma) - 1;
            for (const auto& tau : slow)
                if (!(tau == sigma) && dim_via_pattern(tau) == below) expected.push_back(tau);
            CoverSet cov = cover_C(sigma);
            std::vector<Involution> got = cov.n_moves;
            for (const auto& m : cov.d_moves) got.push_back(m.result);
            std::sort(got.begin(), got.end());
            ok = ok && got == expected;
            if (!ok) ++res.failures;
        }
    return res;
}

CheckResult check_meander_codim(int n_max, int cap) {
    CheckResult res{"meander-codim"};
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto tabs = enumerate_tableaux(n, k);
            for (const auto& s : tabs)
                for (const auto& t : tabs) {
                    ++res.cases;
                    auto rep = intersect(sigma_of_tableau(s), sigma_of_tableau(t), k, cap);
                    int codim = k * (n - k) - *std::max_element(rep.dims.begin(), rep.dims.end());
                    bool crit = codim1_criterion(s, t);
                    bool ok = crit == (codim == 1) && (!crit || rep.components.size() == 1);
                    if (!ok) ++res.failures;
                }
        }
    return res;
}

CheckResult check_segment_soundness(int n_max, int cap) {
    CheckResult res{"segment-reducibility"};
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            auto tabs = enumerate_tableaux(n, k);
            for (const auto& s : tabs)
                for (const auto& t : tabs) {
                    ++res.cases;
                    if (!reducibility_sufficient(s, t)) continue;
                    auto rep = intersect(sigma_of_tableau(s), sigma_of_tableau(t), k, cap);
                    if (rep.components.size() < 2) ++res.failures;
                }
        }
    return res;
}

int run_verify(int n_max, int cap, const std::string& mutate) {
    if (!mutate.empty() && mutate != "crossings") throw Error("unknown mutation \"" + mutate + "\"");
    std::vector<CheckResult> results;
    auto timed = [&](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        results.push_back(fn());
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::cerr << results.back().name << ": " << took.count() << "s\n";
    };
    timed([&] { return check_dim_equivalence(n_max, cap, mutate == "crossings"); });
    timed([&] { return check_rank_membership(n_max, cap); });
    timed([&] { return check_cover_codim(n_max, cap); });
    timed([&] { return check_meander_codim(n_max, cap); });
    timed([&] { return check_segment_soundness(n_max, cap); });

    bool all_ok = true;
    for (const auto& r : results) {
        bool ok = r.failures == 0;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << r.name << ": " << r.cases << " cases, " << r.failures
                  << " failures\n";
    }
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link patterns of square-zero upper-triangular B-orbits"};
    app.require_subcommand(1);

    std::string sigma_spec, other_spec, out_path, format = "table", cache_dir, mutate;
    int n = 0, cap = default_enum_cap, n_max = 6;
    std::optional<int> k;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_option("--cap", cap, "exhaustive enumeration cap on n");
        cmd->add_option("--format", format, "output format (table, json, dot)");
    };

    auto* cmd_dim = app.add_subcommand("dim", "pattern statistics and orbit dimension");
    cmd_dim->add_option("sigma", sigma_spec, "involution (inline arcs, JSON, or file)")->required();
    add_common(cmd_dim);

    auto* cmd_enum = app.add_subcommand("enum", "list involutions, optionally one length stratum");
    cmd_enum->add_option("--n", n, "number of points")->required();
    cmd_enum->add_option("--k", k, "arc count filter");
    add_common(cmd_enum);

    auto* cmd_closure = app.add_subcommand("closure", "all orbits in the closure");
    cmd_closure->add_option("sigma", sigma_spec, "involution")->required();
    add_common(cmd_closure);

    auto* cmd_cover = app.add_subcommand("cover", "codimension-1 boundary orbits with move provenance");
    cmd_cover->add_option("sigma", sigma_spec, "involution")->required();
    add_common(cmd_cover);

    auto* cmd_poset = app.add_subcommand("poset", "Hasse diagram of the closure order");
    cmd_poset->add_option("--n", n, "number of points")->required();
    cmd_poset->add_option("--k", k, "arc count filter");
    cmd_poset->add_option("--cache-dir", cache_dir, "poset cache directory (or LINKPAT_CACHE_DIR)");
    add_common(cmd_poset);

    auto* cmd_tableaux = app.add_subcommand("tableaux", "two-column standard tableaux of a shape");
    cmd_tableaux->add_option("--n", n, "number of cells")->required();
    cmd_tableaux->add_option("--k", k, "second-column length")->required();
    add_common(cmd_tableaux);

    auto* cmd_sigma_t = app.add_subcommand("sigma-t", "maximal involution of a tableau");
    cmd_sigma_t->add_option("tableau", sigma_spec, "tableau (JSON or file)")->required();
    add_common(cmd_sigma_t);

    auto* cmd_closure_t = app.add_subcommand("closure-t", "boundary tableaux of an orbital variety");
    cmd_closure_t->add_option("tableau", sigma_spec, "tableau (JSON or file)")->required();
    add_common(cmd_closure_t);

    auto* cmd_meander = app.add_subcommand("meander", "walk the meander of two patterns");
    cmd_meander->add_option("top", sigma_spec, "top involution")->required();
    cmd_meander->add_option("bottom", other_spec, "bottom involution")->required();
    add_common(cmd_meander);

    auto* cmd_intersect = app.add_subcommand("intersect", "decompose the intersection of two closures");
    cmd_intersect->add_option("a", sigma_spec, "first involution")->required();
    cmd_intersect->add_option("b", other_spec, "second involution")->required();
    cmd_intersect->add_option("--k", k, "restrict components to one length stratum");
    add_common(cmd_intersect);

    auto* cmd_verify = app.add_subcommand("verify", "run the oracle suite");
    cmd_verify->add_option("--n-max", n_max, "largest n to sweep");
    cmd_verify->add_option("--mutate", mutate, "inject a fault (value: crossings)");
    cmd_verify->add_option("--cap", cap, "exhaustive enumeration cap on n");

    CLI11_PARSE(app, argc, argv);

    try {
        bool json_format = format == "json";
        if (format != "table" && format != "json" && format != "dot")
            throw Error("unknown format \"" + format + "\"");
        if (format == "dot" && !cmd_poset->parsed() && !cmd_meander->parsed())
            throw Error("dot output is only available for poset and meander");

        if (cmd_dim->parsed()) {
            Involution sigma = parse_involution_spec(sigma_spec);
            auto st = pattern_stats(sigma);
            int by_pattern = dim_via_pattern(sigma), by_q = dim_via_q(sigma);
            if (by_pattern != by_q) {
                std::cerr << "internal error: dimension formulas disagree (" << by_pattern << " vs " << by_q
                          << ") on " << cyclic_form(sigma) << "\n";
                return 3;
            }
            if (json_format) {
                json j = involution_to_json(sigma);
                j["crossings"] = st.crossings;
                j["dim"] = by_pattern;
                j["fixed_under"] = st.fixed_under;
                j["length"] = st.length;
                emit(out_path, dump(j));
            } else {
                std::ostringstream text;
                text << "sigma       " << cyclic_form(sigma) << "\n";
                text << "n           " << sigma.n << "\n";
                text << "length      " << st.length << "\n";
                text << "crossings   " << st.crossings << "\n";
                text << "fixed-under " << st.fixed_under << "\n";
                text << "dim         " << by_pattern << "\n";
                emit(out_path, text.str());
            }
        } else if (cmd_enum->parsed()) {
            auto list = enumerate_involutions(n, k, cap);
            emit(out_path, json_format ? dump(involutions_to_json(list)) : involutions_to_table(list));
        } else if (cmd_closure->parsed()) {
            auto list = closure(parse_involution_spec(sigma_spec), cap);
            emit(out_path, json_format ? dump(involutions_to_json(list)) : involutions_to_table(list));
        } else if (cmd_cover->parsed()) {
            Involution sigma = parse_involution_spec(sigma_spec);
            CoverSet cover = cover_C(sigma);
            if (json_format) {
                emit(out_path, dump(cover_to_json(sigma, cover)));
            } else {
                std::ostringstream text;
                text << "cover of " << involution_line(sigma) << "\n";
                text << "arc deletions:\n";
                for (const auto& s : cover.n_moves) text << "  " << involution_line(s) << "\n";
                text << "rearrangements:\n";
                for (const auto& m : cover.d_moves) {
                    text << "  " << involution_line(m.result) << "  [";
                    for (std::size_t s = 0; s < m.tags.size(); ++s) {
                        const auto& tag = m.tags[s];
                        if (s) text << "; ";
                        switch (tag.kind) {
                            case MoveKind::shrink_left:
                                text << "shrink-left (" << tag.arc.first << "," << tag.arc.second << ")->" << tag.to;
                                break;
                            case MoveKind::shrink_right:
                                text << "shrink-right (" << tag.arc.first << "," << tag.arc.second << ")->" << tag.to;
                                break;
                            case MoveKind::cross_left:
                                text << "cross-left (" << tag.arc.first << "," << tag.arc.second << ") with ("
                                     << tag.partner.first << "," << tag.partner.second << ")";
                                break;
                            case MoveKind::cross_nested:
                                text << "cross-nested (" << tag.arc.first << "," << tag.arc.second << ") with ("
                                     << tag.partner.first << "," << tag.partner.second << ")";
                                break;
                        }
                    }
                    text << "]\n";
                }
                emit(out_path, text.str());
            }
        } else if (cmd_poset->parsed()) {
            if (cache_dir.empty())
                if (const char* env = std::getenv("LINKPAT_CACHE_DIR")) cache_dir = env;
            OrbitPoset poset;
            bool loaded = false;
            std::string path;
            if (!cache_dir.empty()) {
                path = cache_path(cache_dir, n, k);
                if (auto cached = load_cached_poset(path, n, k)) {
                    poset = std::move(*cached);
                    loaded = true;
                }
            }
            if (!loaded) {
                poset = build_poset(n, k, cap);
                if (!path.empty()) store_cached_poset(path, poset);
            }
            if (format == "dot")
                emit(out_path, poset_to_dot(poset));
            else if (json_format)
                emit(out_path, dump(poset_to_json(poset)));
            else {
                std::ostringstream text;
                text << poset.nodes.size() << " orbits, " << poset.hasse_edges.size() << " cover edges\n";
                for (std::size_t s = 0; s < poset.nodes.size(); ++s)
                    text << "  [" << s << "] " << involution_line(poset.nodes[s].sigma) << "\n";
                for (const auto& [p, c] : poset.hasse_edges) text << "  " << p << " -> " << c << "\n";
                emit(out_path, text.str());
            }
        } else if (cmd_tableaux->parsed()) {
            auto tabs = enumerate_tableaux(n, k.value_or(0));
            if (json_format) {
                json out = json::array();
                for (const auto& t : tabs) out.push_back(tableau_to_json(t));
                emit(out_path, dump(out));
            } else {
                std::ostringstream text;
                for (const auto& t : tabs) text << tableau_line(t) << "\n";
                emit(out_path, text.str());
            }
        } else if (cmd_sigma_t->parsed()) {
            TwoColumnTableau t = parse_tableau_spec(sigma_spec);
            Involution sigma = sigma_of_tableau(t);
            if (json_format) {
                json j = involution_to_json(sigma);
                j["dim"] = dim_via_pattern(sigma);
                emit(out_path, dump(j));
            } else {
                emit(out_path, involution_line(sigma) + "\n");
            }
        } else if (cmd_closure_t->parsed()) {
            auto tabs = closure_tableaux(parse_tableau_spec(sigma_spec));
            if (json_format) {
                json out = json::array();
                for (const auto& t : tabs) out.push_back(tableau_to_json(t));
                emit(out_path, dump(out));
            } else {
                std::ostringstream text;
                for (const auto& t : tabs) text << tableau_line(t) << "\n";
                emit(out_path, text.str());
            }
        } else if (cmd_meander->parsed()) {
            Meander m = build_meander(parse_involution_spec(sigma_spec), parse_involution_spec(other_spec));
            if (format == "dot") {
                emit(out_path, meander_to_dot(m));
            } else if (json_format) {
                emit(out_path, dump(meander_to_json(m)));
            } else {
                auto cls = classify_meander(m);
                std::ostringstream text;
                text << "top    " << cyclic_form(m.top) << "\n";
                text << "bottom " << cyclic_form(m.bottom) << "\n";
                for (const auto& comp : m.components) {
                    text << (comp.kind == ComponentKind::loop ? "loop" : "interval") << " length " << comp.length
                         << ":";
                    for (const auto& [side, arc] : comp.arcs)
                        text << " " << side << "(" << arc.first << "," << arc.second << ")";
                    text << "\n";
                }
                if (!m.isolated.empty()) {
                    text << "isolated:";
                    for (int p : m.isolated) text << " " << p;
                    text << "\n";
                }
                text << (cls.even ? "even" : "odd") << ", " << cls.loops << " loops, " << cls.even_intervals
                     << " even intervals, " << cls.odd_intervals << " odd intervals\n";
                emit(out_path, text.str());
            }
        } else if (cmd_intersect->parsed()) {
            Involution a = parse_involution_spec(sigma_spec), b = parse_involution_spec(other_spec);
            IntersectionReport rep = intersect(a, b, k, cap);
            auto cls = classify_meander(build_meander(a, b));
            auto segs = one_segments(a, b);
            bool chain = segments_chain(rep.min_matrix, segs);
            if (json_format) {
                json j = intersection_to_json(rep);
                j["classification"] = json{{"even", cls.even},
                                           {"even_intervals", cls.even_intervals},
                                           {"loops", cls.loops},
                                           {"odd_intervals", cls.odd_intervals}};
                json seglist = json::array();
                for (const auto& [i, jj] : segs) seglist.push_back(json::array({i, jj}));
                j["one_segments"] = seglist;
                j["reducibility_sufficient"] = chain;
                j["tl_exponent"] = cls.even ? json(cls.loops) : json(nullptr);
                emit(out_path, dump(j));
            } else {
                std::ostringstream text;
                text << "a " << involution_line(a) << "\n";
                text << "b " << involution_line(b) << "\n";
                text << "min matrix:\n" << matrix_block(rep.min_matrix, "  ");
                text << (rep.irreducible ? "irreducible" : "reducible") << ", " << rep.components.size()
                     << " component(s):\n";
                for (std::size_t s = 0; s < rep.components.size(); ++s)
                    text << "  " << cyclic_form(rep.components[s]) << " d=" << rep.dims[s] << " codim "
                         << rep.codims_a[s] << "/" << rep.codims_b[s] << "\n";
                text << "meander: " << (cls.even ? "even" : "odd") << ", " << cls.loops << " loops, "
                     << cls.even_intervals << " even intervals, " << cls.odd_intervals << " odd intervals\n";
                if (cls.even)
                    text << "tl exponent: " << cls.loops << "\n";
                else
                    text << "tl exponent: none (odd meander)\n";
                text << "1-segments:";
                for (const auto& [i, j2] : segs) text << " [" << i << "," << j2 << "]";
                text << "\n";
                text << "segment chain criterion: " << (chain ? "reducible" : "inconclusive") << "\n";
                emit(out_path, text.str());
            }
        } else if (cmd_verify->parsed()) {
            return run_verify(n_max, cap, mutate);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.position != std::string::npos) std::cerr << " at offset " << e.position;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

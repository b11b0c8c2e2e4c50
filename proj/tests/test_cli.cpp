#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkpat/json_io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the binary through the shell, capturing stdout; stderr is dropped so
// timing chatter cannot affect comparisons
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string command = env_prefix + std::string(LINKPAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) res.out.append(buffer, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("linkpat-test-" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("dim command reports the worked example") {
    RunResult res = run_cli("dim '1-3,2-6,4-7 @7'");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("dim         8") != std::string::npos);
    CHECK(res.out.find("crossings   2") != std::string::npos);

    RunResult id = run_cli("dim '@5'");
    CHECK(id.exit_code == 0);
    CHECK(id.out.find("dim         0") != std::string::npos);
}

TEST_CASE("dim json output round-trips") {
    RunResult res = run_cli("dim '1-3,2-6,4-7 @7' --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["dim"] == 8);
    CHECK(linkpat::involution_from_json(j) == linkpat::parse_inline_arcs("1-3,2-6,4-7@7"));
}

TEST_CASE("random dims agree between the formulas end to end") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<int> points(n);
        for (int p = 0; p < n; ++p) points[p] = p + 1;
        std::shuffle(points.begin(), points.end(), rng);
        int pairs = static_cast<int>(rng() % (n / 2 + 1));
        std::ostringstream spec;
        for (int s = 0; s < pairs; ++s) {
            int a = points[2 * s], b = points[2 * s + 1];
            if (a > b) std::swap(a, b);
            spec << (s ? "," : "") << a << "-" << b;
        }
        spec << "@" << n;
        RunResult res = run_cli("dim '" + spec.str() + "' --format json");
        CHECK(res.exit_code == 0); // the command itself cross-checks the formulas
    }
}

TEST_CASE("parse errors exit with code 2") {
    RunResult res = run_cli("dim '1-3,x@7'");
    CHECK(res.exit_code == 2);
    RunResult res2 = run_cli("dim '1-1@4'");
    CHECK(res2.exit_code == 2);
}

TEST_CASE("enum respects the stratum filter and cap") {
    RunResult res = run_cli("enum --n 6 --k 2 --format json");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).size() == 45);
    RunResult capped = run_cli("enum --n 13");
    CHECK(capped.exit_code == 1);
    RunResult raised = run_cli("enum --n 13 --k 1 --cap 13 --format json");
    CHECK(raised.exit_code == 0);
    CHECK(json::parse(raised.out).size() == 78); // C(13,2) single-arc patterns
}

TEST_CASE("closure command counts match the frozen value") {
    RunResult res = run_cli("closure '1-3,2-6,4-7 @7' --format json");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).size() == 30);
}

TEST_CASE("cover output is labeled") {
    RunResult res = run_cli("cover '2-5,3-4,6-9,7-8 @9'");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("shrink-left (2,5)->1") != std::string::npos);
    CHECK(res.out.find("cross-nested (3,4) with (2,5)") != std::string::npos);
    CHECK(res.out.find("cross-left (6,9) with (2,5)") != std::string::npos);
}

TEST_CASE("poset json, dot and determinism") {
    RunResult first = run_cli("poset --n 4 --format json");
    RunResult second = run_cli("poset --n 4 --format json");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out); // byte-identical
    json j = json::parse(first.out);
    CHECK(j["nodes"].size() == 10);

    RunResult dot = run_cli("poset --n 4 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("d=4") != std::string::npos);

    // dot is refused outside poset/meander
    CHECK(run_cli("enum --n 4 --format dot").exit_code == 1);
}

TEST_CASE("poset cache is transparent and survives corruption") {
    auto dir = fresh_dir("cache");
    std::string flag = " --cache-dir " + dir.string();
    RunResult plain = run_cli("poset --n 5 --format json");
    RunResult cold = run_cli("poset --n 5 --format json" + flag);
    RunResult warm = run_cli("poset --n 5 --format json" + flag);
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == cold.out);
    CHECK(plain.out == warm.out);
    bool cached = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        cached = true;
        std::ofstream(entry.path(), std::ios::trunc) << "{not json";
    }
    CHECK(cached);
    RunResult rebuilt = run_cli("poset --n 5 --format json" + flag);
    CHECK(rebuilt.exit_code == 0);
    CHECK(rebuilt.out == plain.out);

    // environment variable form
    auto env_dir = fresh_dir("cache-env");
    std::string env_prefix = "LINKPAT_CACHE_DIR=" + env_dir.string() + " ";
    RunResult via_env = run_cli("poset --n 4 --format json", env_prefix);
    CHECK(via_env.exit_code == 0);
    CHECK(via_env.out == run_cli("poset --n 4 --format json").out);
    bool env_cached = !std::filesystem::is_empty(env_dir);
    CHECK(env_cached);
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(env_dir);
}

TEST_CASE("tableaux and sigma-t") {
    RunResult res = run_cli("tableaux --n 8 --k 4 --format json");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).size() == 14);

    RunResult st = run_cli("sigma-t '{\"n\":8,\"col1\":[1,2,3,6],\"col2\":[4,5,7,8]}'");
    CHECK(st.exit_code == 0);
    CHECK(st.out.find("(1,8)(2,5)(3,4)(6,7)") != std::string::npos);
}

TEST_CASE("meander and intersect surface the worked numbers") {
    RunResult m = run_cli("meander '2-3,5-6 @6' '1-2,4-5 @6'");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("even, 0 loops, 2 even intervals") != std::string::npos);

    RunResult x = run_cli("intersect '1-3,4-5 @6' '2-3,4-6 @6'");
    CHECK(x.exit_code == 0);
    CHECK(x.out.find("reducible, 2 component(s)") != std::string::npos);
    CHECK(x.out.find("(1,3)(4,6) d=6") != std::string::npos);
    CHECK(x.out.find("(1,6)(2,5) d=4") != std::string::npos);
    CHECK(x.out.find("1-segments: [1,3] [2,5] [4,6]") != std::string::npos);

    RunResult xj = run_cli("intersect '1-3,4-5 @6' '2-3,4-6 @6' --format json");
    json j = json::parse(xj.out);
    CHECK(j["irreducible"] == false);
    CHECK(j["components"].size() == 2);
    CHECK(j["tl_exponent"].is_null() == false);
}

TEST_CASE("output lands in files with --out") {
    auto dir = fresh_dir("out");
    auto path = (dir / "result.json").string();
    RunResult res = run_cli("dim '1-2@4' --format json --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["dim"] == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify passes at small n and fails under mutation") {
    RunResult ok = run_cli("verify --n-max 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    RunResult bad = run_cli("verify --n-max 4 --mutate crossings");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL dim-equivalence") != std::string::npos);
}

}

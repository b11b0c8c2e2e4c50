#include <doctest.h>

#include <algorithm>

#include "linkpat/covers.hpp"
#include "linkpat/order.hpp"

using namespace linkpat;

namespace {

Involution inv(int n, std::vector<Arc> arcs) { return involution_from_arcs(n, std::move(arcs)); }

std::vector<Involution> cover_results(const Involution& sigma) {
    CoverSet cover = cover_C(sigma);
    std::vector<Involution> all = cover.n_moves;
    for (const auto& m : cover.d_moves) all.push_back(m.result);
    std::sort(all.begin(), all.end());
    return all;
}

bool has_result(const std::vector<DMove>& moves, const Involution& target) {
    return std::any_of(moves.begin(), moves.end(), [&](const DMove& m) { return m.result == target; });
}

} // namespace

TEST_SUITE("covers") {

TEST_CASE("arc deletions use external arcs") {
    auto del = cover_N(inv(7, {{1, 3}, {2, 7}, {4, 5}}));
    CHECK(del == std::vector<Involution>{inv(7, {{1, 3}, {4, 5}}), inv(7, {{2, 7}, {4, 5}})});
    CHECK(cover_N(inv(4, {})).empty());
}

TEST_CASE("shrink moves of the worked example") {
    // fixed points 2 and 8; only four of the six endpoint moves are admissible
    auto moves = cover_D(inv(8, {{1, 6}, {3, 5}, {4, 7}}));
    CHECK(has_result(moves, inv(8, {{1, 8}, {3, 5}, {4, 7}})));
    CHECK(has_result(moves, inv(8, {{1, 6}, {2, 5}, {4, 7}})));
    CHECK(has_result(moves, inv(8, {{1, 6}, {2, 7}, {3, 5}})));
    CHECK(has_result(moves, inv(8, {{1, 6}, {3, 5}, {4, 8}})));
    int shrinks = 0;
    for (const auto& m : moves)
        for (const auto& tag : m.tags)
            if (tag.kind == MoveKind::shrink_left || tag.kind == MoveKind::shrink_right) ++shrinks;
    CHECK(shrinks == 4); // (3,5) cannot reach 8, (1,6) cannot shrink left
}

TEST_CASE("left-cross admissible partners of the worked example") {
    Involution sigma = inv(11, {{1, 5}, {2, 4}, {3, 6}, {7, 9}, {10, 11}});
    CHECK(l_arcs(sigma, {7, 9}) == std::vector<Arc>{{1, 5}, {3, 6}});
    CHECK(l_arcs(sigma, {10, 11}) == std::vector<Arc>{{7, 9}});
    CHECK(l_arcs(sigma, {1, 5}).empty());
    CHECK(l_arcs(sigma, {2, 4}).empty());
    CHECK(l_arcs(sigma, {3, 6}).empty());

    auto moves = cover_D(sigma);
    CHECK(has_result(moves, inv(11, {{1, 7}, {2, 4}, {3, 6}, {5, 9}, {10, 11}})));
    CHECK(has_result(moves, inv(11, {{1, 5}, {2, 4}, {3, 7}, {6, 9}, {10, 11}})));
    CHECK(has_result(moves, inv(11, {{1, 5}, {2, 4}, {3, 6}, {7, 10}, {9, 11}})));
}

TEST_CASE("nested-cross admissible partners of the worked example") {
    Involution sigma = inv(11, {{1, 11}, {2, 6}, {3, 9}, {4, 5}});
    CHECK(ov_arcs(sigma, {4, 5}) == std::vector<Arc>{{2, 6}, {3, 9}});
    CHECK(ov_arcs(sigma, {2, 6}) == std::vector<Arc>{{1, 11}});
    CHECK(ov_arcs(sigma, {3, 9}) == std::vector<Arc>{{1, 11}});
    CHECK(ov_arcs(sigma, {1, 11}).empty());

    auto moves = cover_D(sigma);
    CHECK(has_result(moves, inv(11, {{1, 11}, {2, 5}, {3, 9}, {4, 6}})));
    CHECK(has_result(moves, inv(11, {{1, 11}, {2, 6}, {3, 5}, {4, 9}})));
    CHECK(has_result(moves, inv(11, {{1, 6}, {2, 11}, {3, 9}, {4, 5}})));
    CHECK(has_result(moves, inv(11, {{1, 9}, {2, 6}, {3, 11}, {4, 5}})));
}

TEST_CASE("every cover member drops dimension by exactly one") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& sigma : enumerate_involutions(n)) {
            int d = dim_via_pattern(sigma);
            CoverSet cover = cover_C(sigma);
            for (const auto& tau : cover.n_moves) {
                CHECK(tau.length() == sigma.length() - 1);
                CHECK(dim_via_pattern(tau) == d - 1);
            }
            for (const auto& m : cover.d_moves) {
                CHECK(m.result.length() == sigma.length());
                CHECK(dim_via_pattern(m.result) == d - 1);
            }
        }
}

TEST_CASE("cover members are exactly the codimension-1 elements below") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& sigma : enumerate_involutions(n)) {
            std::vector<Involution> expected;
            int below = dim_via_pattern(sigma) - 1;
            for (const auto& tau : closure_by_filter(sigma))
                if (!(tau == sigma) && dim_via_pattern(tau) == below) expected.push_back(tau);
            CHECK(cover_results(sigma) == expected);
        }
}

TEST_CASE("arc-deletion covers are the maximal shorter elements") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& sigma : enumerate_involutions(n)) {
            std::vector<Involution> shorter;
            for (const auto& tau : closure_by_filter(sigma))
                if (tau.length() < sigma.length()) shorter.push_back(tau);
            std::vector<Involution> expected;
            for (const auto& tau : shorter) {
                bool maximal = true;
                for (const auto& higher : shorter)
                    if (!(higher == tau) && leq(tau, higher)) maximal = false;
                if (maximal) expected.push_back(tau);
            }
            CHECK(cover_N(sigma) == expected);
        }
}

TEST_CASE("moves lower the rank matrix") {
    for (const auto& sigma : enumerate_involutions(7)) {
        RankMatrix r = rank_matrix(sigma);
        for (const auto& tau : cover_results(sigma)) {
            RankMatrix rt = rank_matrix(tau);
            bool strict = false;
            for (int i = 1; i <= 7; ++i)
                for (int j = 1; j <= 7; ++j) {
                    CHECK(rt.at(i, j) <= r.at(i, j));
                    if (rt.at(i, j) < r.at(i, j)) strict = true;
                }
            CHECK(strict);
        }
    }
}

TEST_CASE("identity has an empty cover") {
    CoverSet cover = cover_C(inv(5, {}));
    CHECK(cover.n_moves.empty());
    CHECK(cover.d_moves.empty());
}

TEST_CASE("stratum minimum") {
    CHECK(minimal_involution(4, 2) == inv(4, {{1, 3}, {2, 4}}));
    CHECK(minimal_involution(6, 0) == inv(6, {}));
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            Involution bottom = minimal_involution(n, k);
            for (const auto& tau : enumerate_involutions(n, k)) CHECK(leq(bottom, tau));
        }
}

TEST_CASE("next-stratum minimum construction") {
    CHECK(sigma_bar_next(inv(2, {})) == inv(2, {{1, 2}}));
    // no external-max arcs: join the outermost fixed points
    CHECK(sigma_bar_next(inv(11, {{1, 6}, {2, 9}, {4, 5}, {7, 11}})) ==
          inv(11, {{1, 6}, {2, 9}, {3, 10}, {4, 5}, {7, 11}}));
    // one external-max arc (2,10): re-thread it through fixed points 3 and 9
    CHECK(sigma_bar_next(inv(11, {{1, 6}, {2, 10}, {4, 5}, {7, 11}})) ==
          inv(11, {{1, 6}, {2, 9}, {3, 10}, {4, 5}, {7, 11}}));
    CHECK_THROWS_AS(sigma_bar_next(inv(4, {{1, 2}, {3, 4}})), NoFixedPoints);
}

TEST_CASE("next-stratum minimum equals the scan minimum with the predicted gap") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& sigma : enumerate_involutions(n)) {
            if (2 * (sigma.length() + 1) > n) continue;
            Involution bar = sigma_bar_next(sigma);
            CHECK(bar.length() == sigma.length() + 1);
            CHECK(leq(sigma, bar));
            for (const auto& tau : enumerate_involutions(n, sigma.length() + 1))
                if (leq(sigma, tau)) CHECK(leq(bar, tau));
            int gap = static_cast<int>(external_max_arcs(sigma).size()) + 1;
            CHECK(dim_via_pattern(bar) - dim_via_pattern(sigma) == gap);
        }
}

}

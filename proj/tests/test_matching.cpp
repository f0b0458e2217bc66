#include <doctest.h>

#include <random>

#include "solrec/errors.hpp"
#include "solrec/matching.hpp"
#include "solrec/oracle.hpp"
#include "support/brute.hpp"

using namespace solrec;

TEST_CASE("small assignment examples") {
    CHECK(min_weight_perfect_matching({{0, 5}, {5, 0}}).weight == 0);
    auto a = min_weight_perfect_matching({{1, 2}, {2, 4}});
    CHECK(a.weight == 4);
    CHECK(a.col_of_row == std::vector<int>{1, 0});
    CHECK(min_weight_perfect_matching({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}).weight == 3);
    CHECK_THROWS_AS(min_weight_perfect_matching({{1, 2}}), InvalidArgument);
}

TEST_CASE("assignments match permutation brute force and carry dual certificates") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        const int r = 1 + static_cast<int>(rng() % 5);
        const int c = r + static_cast<int>(rng() % 3);
        CostMatrix m(r, std::vector<std::int64_t>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 10);
        auto a = min_weight_assignment(m);
        CHECK(a.weight == brute::permutation_assignment(m));
        CHECK(certifies_optimality(m, a));
        std::vector<char> used(c, 0);
        std::int64_t w = 0;
        for (int i = 0; i < r; ++i) {
            CHECK_FALSE(used[a.col_of_row[i]]);
            used[a.col_of_row[i]] = 1;
            w += m[i][a.col_of_row[i]];
        }
        CHECK(w == a.weight);
        auto lex = lexicographic_min_assignment(m);
        CHECK(lex.weight == a.weight);
        CHECK(lex.col_of_row <= a.col_of_row);
    }
}

TEST_CASE("pad_square") {
    auto p = pad_square({{1, 2, 3}}, 7);
    REQUIRE(p.size() == 3);
    CHECK(p[1] == std::vector<std::int64_t>{7, 7, 7});
}

TEST_CASE("sliding cost examples") {
    Graph p3 = brute::path(3);
    CHECK(sliding_cost(p3, {1}, {1}) == 0);
    CHECK(sliding_cost(p3, {0}, {2}) == 2);
    CHECK(sliding_cost(brute::path(4), {0, 1}, {2, 3}) == 4);
    CHECK_FALSE(sliding_cost(p3, {0}, {2}, 1).has_value());
    CHECK_FALSE(sliding_cost(Graph(2, {}), {0}, {1}).has_value());
}

TEST_CASE("slide schedules replay with exactly the matching cost") {
    auto seq = extract_slide_schedule(brute::path(3), {0}, {2}, {0});
    CHECK(seq == MoveSequence{Move::slide(0, 1), Move::slide(1, 2)});
    CHECK(extract_slide_schedule(brute::path(3), {0, 2}, {0, 2}, {0, 1}).empty());

    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        Graph g = brute::random_connected(n, 0.25, rng);
        const int k = 1 + static_cast<int>(rng() % std::min(4, n));
        TokenConfig s(brute::random_subset(n, k, rng)), d(brute::random_subset(n, k, rng));
        auto plan = sliding_plan(g, s, d);
        REQUIRE(plan);
        CHECK(plan->cost == brute::reach_min(g, brute::mask_of(s.vertices()),
                                             brute::mask_of(d.vertices())));
        auto moves = extract_slide_schedule(g, s, d, plan->assignment);
        CHECK(static_cast<int>(moves.size()) == plan->cost);
        TokenConfig cur = s;
        for (const Move& m : moves) apply_move(g, Model::Slide, cur, m);
        CHECK(cur == d);
    }
}

TEST_CASE("color swaps along a path") {
    Graph p4 = brute::path(4);
    for (int len = 1; len <= 3; ++len) {
        std::vector<Vertex> path;
        for (int i = 0; i <= len; ++i) path.push_back(i);
        auto seq = swap_colors_via_sliding(p4, 0, len, path);
        CHECK(static_cast<int>(seq.size()) == 2 * len - 1);
        Coloring c{1, 2, 3, 4};
        for (const Move& m : seq) apply_move(p4, Model::ColorSlide, 4, c, m);
        Coloring want{1, 2, 3, 4};
        std::swap(want[0], want[len]);
        CHECK(c == want);
    }
    CHECK_THROWS_AS(swap_colors_via_sliding(p4, 0, 2, {0, 2}), InvalidArgument);
}

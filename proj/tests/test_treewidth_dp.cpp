#include <doctest.h>

#include <random>

#include "solrec/errors.hpp"
#include "solrec/oracle.hpp"
#include "solrec/treewidth_dp.hpp"
#include "support/brute.hpp"

using namespace solrec;

namespace {

SubsetInstance slide(Problem p, Graph g, TokenConfig s, int b) {
    return make_subset_instance(p, Model::Slide, std::move(g), std::move(s), b);
}

}  // namespace

TEST_CASE("leaf table holds only the empty state") {
    auto inst = slide(Problem::VertexCover, brute::path(2), {0}, 3);
    auto ctx = DPContext::from(inst);
    auto leaf = dp_leaf(ctx);
    CHECK(leaf.num_states() == 1);
    CHECK(leaf.sol(0, 0, {}, {}));
    CHECK_FALSE(leaf.sol(1, 0, {}, {}));
    CHECK_FALSE(leaf.sol(0, 1, {}, {}));
}

TEST_CASE("introduce an isolated vertex") {
    auto inst = slide(Problem::VertexCover, Graph(1, {}), {0}, 2);
    auto ctx = DPContext::from(inst);
    auto t = dp_introduce(ctx, dp_leaf(ctx), 0);
    CHECK(t.sol(1, 0, {1}, {0}));
    // Leaving the vertex empty strands its token, and the vertex is closed.
    CHECK(t.num_states() == 1);
}

TEST_CASE("introduce applies the coverage guard") {
    auto inst = slide(Problem::VertexCover, Graph(2, {{0, 1}}), {}, 2);
    auto ctx = DPContext::from(inst);
    auto t = dp_introduce(ctx, dp_introduce(ctx, dp_leaf(ctx), 0), 1);
    for (const auto& [key, bits] : t.entries) {
        int q;
        std::vector<int> a, b;
        DPTable::decode(key, q, a, b);
        CHECK((a[0] == 1 || a[1] == 1));
    }
}

TEST_CASE("forget settles the flow of the forgotten vertex over its bag edges") {
    auto inst = slide(Problem::VertexCover, Graph(2, {{0, 1}}), {0}, 2);
    auto ctx = DPContext::from(inst);
    auto one = dp_introduce(ctx, dp_leaf(ctx), 0);
    CHECK(one.sol(0, 0, {0}, {-1}));
    auto two = dp_introduce(ctx, one, 1);
    CHECK(two.sol(1, 0, {0, 1}, {-1, 1}));
    auto f = dp_forget(ctx, two, 0);
    // The token slides 0 -> 1 for one move.
    CHECK(f.sol(1, 1, {1}, {0}));
    CHECK_FALSE(f.sol(1, 0, {1}, {0}));
    CHECK(f.sol(1, 0, {0}, {0}));
}

TEST_CASE("forget drops states with pending flow") {
    auto inst = slide(Problem::VertexCover, brute::path(3), {0}, 3);
    auto ctx = DPContext::from(inst);
    auto t = dp_introduce(ctx, dp_introduce(ctx, dp_leaf(ctx), 0), 1);
    auto f = dp_forget(ctx, t, 0);
    CHECK(f.bag == std::vector<Vertex>{1});
    // Token moved 0 -> 1 and 1 is in the cover.
    CHECK(f.sol(1, 1, {1}, {0}));
    // Token stays on 0: 1 may stay empty.
    CHECK(f.sol(1, 0, {0}, {0}));
    CHECK_FALSE(f.sol(0, 0, {0}, {0}));
}

TEST_CASE("join on an empty bag convolves budgets") {
    auto inst = slide(Problem::VertexCover, Graph(2, {}), {0, 1}, 3);
    auto ctx = DPContext::from(inst);
    auto side = [&](Vertex v) { return dp_forget(ctx, dp_introduce(ctx, dp_leaf(ctx), v), v); };
    auto l = side(0), r = side(1);
    CHECK(l.sol(1, 0, {}, {}));
    auto j = dp_join(ctx, l, r);
    CHECK(j.sol(2, 0, {}, {}));
    CHECK_FALSE(j.sol(1, 0, {}, {}));
    auto leaf = dp_leaf(ctx);
    CHECK(dp_join(ctx, leaf, leaf).sol(0, 0, {}, {}));
}

TEST_CASE("join transfers flow between the children") {
    // Star centre 0 with leaves 1 and 2; the token on 1 ends on 2.
    Graph star(3, {{0, 1}, {0, 2}});
    auto inst = slide(Problem::IndependentSet, star, {1}, 2);
    auto ctx = DPContext::from(inst);
    auto c = dp_introduce(ctx, dp_leaf(ctx), 0);
    auto l = dp_forget(ctx, dp_introduce(ctx, c, 1), 1);
    auto r = dp_forget(ctx, dp_introduce(ctx, c, 2), 2);
    auto j = dp_join(ctx, l, r);
    CHECK(j.sol(1, 2, {0}, {0}));
    CHECK(dp_join(ctx, l, r).bag == std::vector<Vertex>{0});
    CHECK_THROWS_AS(dp_join(ctx, l, dp_leaf(ctx)), InvalidDecomposition);
}

TEST_CASE("discovery examples") {
    auto a = solve_discovery_tw(slide(Problem::VertexCover, brute::path(3), {0}, 1));
    CHECK(a.yes);
    CHECK(a.min_moves == 1);
    auto b = solve_discovery_tw(slide(Problem::IndependentSet, brute::path(3), {0, 1}, 1));
    CHECK(b.yes);
    CHECK(b.min_moves == 1);
    auto c = solve_discovery_tw(slide(Problem::VertexCover, brute::cycle(4), {0, 1}, 1));
    CHECK(c.yes);
    CHECK(c.min_moves == 1);
    CHECK_THROWS_AS(solve_discovery_tw(slide(Problem::DominatingSet, brute::path(3), {0}, 1)),
                    SolverInapplicable);
}

TEST_CASE("program agrees with the oracle on bounded treewidth graphs") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const int w = 1 + static_cast<int>(rng() % 3);
        Graph g = brute::random_partial_ktree(n, w, 0.75, rng);
        const int k = 1 + static_cast<int>(rng() % std::min(4, n));
        const int b = static_cast<int>(rng() % 6);
        auto p = t % 2 ? Problem::IndependentSet : Problem::VertexCover;
        auto inst = slide(p, g, TokenConfig(brute::random_subset(n, k, rng)), b);
        auto r = solve_discovery_tw(inst);
        auto o = oracle_solve(inst);
        REQUIRE(r.yes == o.yes);
        CHECK(r.min_moves == o.min_moves);
        auto exact = solve_discovery_tw(inst, tree_decomposition(g, DecompositionMode::Exact));
        CHECK(exact.yes == r.yes);
        CHECK(exact.min_moves == r.min_moves);
    }
}

TEST_CASE("no node stores a locally invalid state and the root bag is empty") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        Graph g = brute::random_partial_ktree(n, 2, 0.8, rng);
        auto inst = slide(t % 2 ? Problem::IndependentSet : Problem::VertexCover, g,
                          TokenConfig(brute::random_subset(n, 2, rng)), 4);
        auto ctx = DPContext::from(inst);
        auto ntd = tree_decomposition(g, DecompositionMode::Heuristic);
        auto tables = dp_all_tables(ctx, ntd);
        for (const auto& tab : tables)
            for (const auto& [key, bits] : tab.entries) {
                int q;
                std::vector<int> a, b;
                DPTable::decode(key, q, a, b);
                CHECK_FALSE(locally_invalid(ctx, tab, b));
            }
        CHECK(tables.back().bag.empty());
        for (const auto& [key, bits] : tables.back().entries) CHECK(key.size() == 1);
    }
}

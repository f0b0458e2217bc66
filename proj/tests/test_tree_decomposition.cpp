#include <doctest.h>

#include <random>

#include "solrec/errors.hpp"
#include "solrec/tree_decomposition.hpp"
#include "support/brute.hpp"

using namespace solrec;

namespace {

// Treewidth by trying every elimination ordering.
int brute_treewidth(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = std::max(0, n - 1);
    do {
        auto adj = brute::adjacency(g);
        brute::Mask gone = 0;
        int w = 0;
        for (Vertex v : order) {
            brute::Mask nb = adj[v] & ~gone;
            w = std::max(w, std::popcount(nb));
            for (Vertex a : brute::members(nb)) adj[a] |= nb & ~brute::bit(a);
            gone |= brute::bit(v);
        }
        best = std::min(best, w);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("widths of standard graphs") {
    CHECK(tree_decomposition(brute::path(4), DecompositionMode::Exact).width() == 1);
    CHECK(tree_decomposition(brute::cycle(5), DecompositionMode::Exact).width() == 2);
    CHECK(tree_decomposition(brute::complete(4), DecompositionMode::Exact).width() == 3);
    CHECK(tree_decomposition(brute::path(4), DecompositionMode::Heuristic).width() == 1);
    CHECK(treewidth_exact(Graph(3, {})) == 0);
}

TEST_CASE("exact treewidth matches elimination brute force") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        Graph g = brute::random_graph(7, 0.45, rng);
        CHECK(treewidth_exact(g) == brute_treewidth(g));
    }
}

TEST_CASE("nice decompositions validate and keep the width") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        Graph g = brute::random_partial_ktree(14, 3, 0.8, rng);
        for (auto mode : {DecompositionMode::Heuristic, DecompositionMode::Exact}) {
            auto ntd = tree_decomposition(g, mode);
            CHECK_NOTHROW(validate(g, ntd));
            CHECK_NOTHROW(validate(g, ntd.as_tree_decomposition()));
            CHECK(ntd.width() <= 3);
            CHECK(ntd.nodes.back().bag.empty());
            for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
                for (int c : ntd.nodes[i].children) CHECK(c < static_cast<int>(i));
        }
    }
}

TEST_CASE("validation names the violated condition") {
    Graph g = brute::path(3);
    TreeDecomposition td;
    td.bags = {{0, 1}, {2}};
    td.parent = {-1, 0};
    td.root = 0;
    CHECK_THROWS_WITH_AS(validate(g, td), doctest::Contains("edge"), InvalidDecomposition);
    td.bags = {{0, 1}, {2}, {1, 2}};
    td.parent = {-1, 0, 1};
    CHECK_THROWS_WITH_AS(validate(g, td), doctest::Contains("vertex 1"), InvalidDecomposition);
    td.bags = {{0, 1}};
    td.parent = {-1};
    CHECK_THROWS_WITH_AS(validate(g, td), doctest::Contains("no bag"), InvalidDecomposition);
    td.bags = {{0, 1}, {1, 2}};
    td.parent = {-1, 0};
    CHECK_NOTHROW(validate(g, td));
}

TEST_CASE("exact mode refuses large graphs") {
    CHECK_THROWS_AS(exact_treewidth_ordering(brute::path(20), 18), ExactLimitExceeded);
}

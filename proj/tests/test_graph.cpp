#include <doctest.h>

#include <random>

#include "solrec/errors.hpp"
#include "solrec/graph.hpp"
#include "solrec/tree_decomposition.hpp"
#include "support/brute.hpp"

using namespace solrec;

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidArgument);
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.max_degree() == 2);
}

TEST_CASE("bfs distances") {
    CHECK(bfs_distances(brute::path(3), 0) == std::vector<int>{0, 1, 2});
    CHECK(bfs_distances(Graph(2, {}), 0) == std::vector<int>{0, kUnreachable});
    CHECK(bfs_distances(brute::cycle(4), 0) == std::vector<int>{0, 1, 2, 1});
    CHECK(add_distance(kUnreachable, 1) == kUnreachable);
}

TEST_CASE("shortest path has distance plus one vertices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Graph g = brute::random_connected(9, 0.2, rng);
        auto d = all_pairs_distances(g);
        for (Vertex u = 0; u < 9; ++u)
            for (Vertex v = 0; v < 9; ++v) {
                auto p = shortest_path(g, u, v);
                REQUIRE(static_cast<int>(p.size()) == d[u * 9 + v] + 1);
                CHECK(p.front() == u);
                CHECK(p.back() == v);
                for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
            }
    }
    CHECK(shortest_path(Graph(2, {}), 0, 1).empty());
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph(3, {})).count() == 3);
    CHECK(connected_components(brute::path(3)).count() == 1);
    auto c = connected_components(Graph(4, {{0, 1}, {2, 3}}));
    REQUIRE(c.count() == 2);
    CHECK(c.members[0] == std::vector<Vertex>{0, 1});
    CHECK(c.members[1] == std::vector<Vertex>{2, 3});
    CHECK(c.component_of[3] == 1);
}

TEST_CASE("bipartition and odd cycle witness") {
    auto e = bipartition(Graph(2, {{0, 1}}));
    REQUIRE(std::holds_alternative<Bipartition>(e));
    CHECK(std::get<Bipartition>(e).left(0) == std::vector<Vertex>{0});
    CHECK(std::get<Bipartition>(e).right(0) == std::vector<Vertex>{1});

    auto t = bipartition(brute::complete(3));
    REQUIRE(std::holds_alternative<OddCycle>(t));
    CHECK(std::get<OddCycle>(t).cycle.size() == 3);

    auto c4 = std::get<Bipartition>(bipartition(brute::cycle(4)));
    CHECK(c4.left(0) == std::vector<Vertex>{0, 2});
    CHECK(c4.right(0) == std::vector<Vertex>{1, 3});
}

TEST_CASE("bipartition agrees with brute force and witnesses are odd closed walks") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : brute::labeled_graphs(n)) {
            auto r = bipartition(g);
            REQUIRE(std::holds_alternative<Bipartition>(r) == brute::two_colorable(g));
            if (auto* b = std::get_if<Bipartition>(&r)) {
                for (auto [u, v] : g.edges()) CHECK(b->side[u] != b->side[v]);
            } else {
                const auto& cyc = std::get<OddCycle>(r).cycle;
                CHECK(cyc.size() % 2 == 1);
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
        }
}

TEST_CASE("degeneracy") {
    std::mt19937_64 rng(3);
    CHECK(degeneracy_order(brute::random_tree(20, rng)).degeneracy == 1);
    CHECK(degeneracy_order(brute::cycle(4)).degeneracy == 2);
    CHECK(degeneracy_order(brute::complete(5)).degeneracy == 4);
    for (int t = 0; t < 30; ++t) {
        Graph g = brute::random_graph(10, 0.4, rng);
        auto d = degeneracy_order(g);
        std::vector<int> pos(10);
        for (int i = 0; i < 10; ++i) pos[d.order[i]] = i;
        int worst = 0;
        for (Vertex v = 0; v < 10; ++v) {
            int later = 0;
            for (Vertex w : g.neighbors(v)) later += pos[w] > pos[v];
            worst = std::max(worst, later);
        }
        CHECK(worst <= d.degeneracy);
        CHECK(worst == d.degeneracy);
    }
}

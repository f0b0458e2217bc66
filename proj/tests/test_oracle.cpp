#include <doctest.h>

#include <random>

#include "solrec/errors.hpp"
#include "solrec/oracle.hpp"
#include "support/brute.hpp"

using namespace solrec;

TEST_CASE("oracle on small subset instances") {
    auto yes = make_subset_instance(Problem::VertexCover, Model::Slide, brute::path(3), {0}, 1);
    auto r = oracle_solve(yes);
    CHECK(r.yes);
    CHECK(r.min_moves == 1);
    REQUIRE(r.certificate);
    CHECK(r.certificate->size() == 1);

    auto no = make_subset_instance(Problem::VertexCover, Model::Slide, brute::path(3), {0}, 0);
    auto rn = oracle_solve(no);
    CHECK_FALSE(rn.yes);
    CHECK(rn.min_moves == -1);
}

TEST_CASE("coloring oracle respects multiset conservation") {
    for (int b : {0, 1, 5}) {
        auto inst = make_coloring_instance(Model::ColorSlide, Graph(2, {{0, 1}}), {1, 1}, 2, b);
        CHECK_FALSE(oracle_solve(inst).yes);
    }
}

TEST_CASE("reach target") {
    Graph p3 = brute::path(3);
    CHECK(oracle_reach_target(p3, {0}, {2}).moves == 2);
    CHECK(oracle_reach_target(p3, {1}, {1}).moves == 0);
    Graph p4 = brute::path(4);
    auto r = oracle_reach_target(p4, {0, 1}, {2, 3});
    CHECK(r.moves == 4);
    CHECK(r.certificate.size() == 4);
    CHECK_THROWS_AS(oracle_reach_target(Graph(2, {}), {0}, {1}), UnreachableTarget);
}

TEST_CASE("oracle matches an independent search on every model") {
    std::mt19937_64 rng(21);
    const Model models[] = {Model::Slide, Model::Jump, Model::AddRemove};
    const Problem problems[] = {Problem::VertexCover, Problem::IndependentSet,
                                Problem::DominatingSet};
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g = brute::random_graph(n, 0.4, rng);
        const int k = 1 + static_cast<int>(rng() % n);
        auto inst = make_subset_instance(problems[t % 3], models[(t / 3) % 3], g,
                                         TokenConfig(brute::random_subset(n, k, rng)),
                                         static_cast<int>(rng() % 5));
        auto r = oracle_solve(inst);
        const int expect = brute::subset_min(inst);
        REQUIRE(r.yes == (expect >= 0));
        CHECK(r.min_moves == expect);
        if (r.yes) {
            auto rr = replay(inst, *r.certificate);
            CHECK(rr.legal);
            CHECK(rr.cost == expect);
            CHECK(is_solution(inst, std::get<TokenConfig>(rr.final_state)));
        }
    }
}

TEST_CASE("coloring oracle matches an independent search") {
    std::mt19937_64 rng(22);
    const Model models[] = {Model::Flip, Model::Swap, Model::ColorSlide};
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % 2);
        Graph g = brute::random_graph(n, 0.5, rng);
        Coloring c(n);
        for (int& x : c) x = 1 + static_cast<int>(rng() % k);
        auto inst = make_coloring_instance(models[t % 3], g, c, k, static_cast<int>(rng() % 5));
        auto r = oracle_solve(inst);
        const int expect = brute::coloring_min(inst);
        REQUIRE(r.yes == (expect >= 0));
        CHECK(r.min_moves == expect);
        if (r.yes) {
            auto rr = replay(inst, *r.certificate);
            CHECK(rr.legal);
            CHECK(rr.cost == expect);
            CHECK(is_proper(g, std::get<Coloring>(rr.final_state)));
        }
    }
}

TEST_CASE("guard limit stops the search") {
    Graph g = brute::cycle(30);
    std::vector<Vertex> s;
    for (int i = 0; i < 15; ++i) s.push_back(i);
    auto inst = make_subset_instance(Problem::IndependentSet, Model::Slide, g, TokenConfig(s), 900);
    OracleOptions o;
    o.guard_limit = 1000;
    CHECK_THROWS_AS(oracle_solve(inst, o), StateSpaceTooLarge);
    CHECK(configuration_space_size(inst) > 1e8);
}

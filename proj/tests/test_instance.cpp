#include <doctest.h>

#include "solrec/errors.hpp"
#include "solrec/instance.hpp"
#include "support/brute.hpp"

using namespace solrec;

TEST_CASE("feasibility predicates") {
    Graph p3 = brute::path(3);
    CHECK(is_feasible(Problem::VertexCover, p3, {1}));
    CHECK_FALSE(is_feasible(Problem::VertexCover, p3, {0}));
    CHECK_FALSE(is_feasible(Problem::IndependentSet, Graph(2, {{0, 1}}), {0, 1}));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_feasible(Problem::DominatingSet, star, {0}));
    CHECK_FALSE(is_feasible(Problem::DominatingSet, star, {1}));
}

TEST_CASE("feasibility agrees with the brute-force predicates") {
    for (const Graph& g : brute::labeled_graphs(4))
        for (brute::Mask m = 0; m < 16; ++m) {
            TokenConfig c(brute::members(m));
            for (auto p : {Problem::VertexCover, Problem::IndependentSet, Problem::DominatingSet})
                CHECK(is_feasible(p, g, c) == brute::feasible(p, g, m));
        }
}

TEST_CASE("proper colorings") {
    Graph e(2, {{0, 1}});
    CHECK(is_proper(e, {1, 2}));
    CHECK_FALSE(is_proper(e, {1, 1}));
    CHECK(is_proper(Graph(3, {}), {1, 1, 1}));
}

TEST_CASE("token moves") {
    Graph e(2, {{0, 1}});
    TokenConfig s{0};
    apply_move(e, Model::Slide, s, Move::slide(0, 1));
    CHECK(s == TokenConfig{1});
    TokenConfig both{0, 1};
    CHECK_THROWS_AS(apply_move(e, Model::Slide, both, Move::slide(0, 1)), IllegalMove);
    TokenConfig t{0};
    CHECK_THROWS_AS(apply_move(brute::path(3), Model::Slide, t, Move::slide(0, 2)), IllegalMove);
    CHECK_NOTHROW(apply_move(brute::path(3), Model::Jump, t, Move::jump(0, 2)));
    CHECK_THROWS_AS(apply_move(e, Model::Slide, t, Move::jump(2, 1)), IllegalMove);
    TokenConfig a{};
    apply_move(e, Model::AddRemove, a, Move::add(1));
    CHECK(a == TokenConfig{1});
    CHECK_THROWS_AS(apply_move(e, Model::AddRemove, a, Move::add(1)), IllegalMove);
    CHECK_THROWS_AS(TokenConfig({1, 1}), InvalidArgument);
}

TEST_CASE("color moves") {
    Graph e(2, {{0, 1}});
    Coloring c{1, 2};
    apply_move(e, Model::ColorSlide, 2, c, Move::cslide(0, 1));
    CHECK(c == Coloring{2, 1});
    Graph gap(3, {{0, 1}});
    Coloring d{1, 1, 2};
    CHECK_THROWS_AS(apply_move(gap, Model::ColorSlide, 2, d, Move::cslide(0, 2)), IllegalMove);
    CHECK_NOTHROW(apply_move(gap, Model::Swap, 2, d, Move::swap(0, 2)));
    CHECK_THROWS_AS(apply_move(gap, Model::Flip, 2, d, Move::flip(0, 3)), IllegalMove);
    CHECK_THROWS_AS(apply_move(gap, Model::Flip, 2, d, Move::swap(0, 1)), IllegalMove);
}

TEST_CASE("replay") {
    auto inst = make_subset_instance(Problem::VertexCover, Model::Slide, brute::path(3), {0}, 1);
    auto r0 = replay(inst, MoveSequence{});
    CHECK(r0.legal);
    CHECK(r0.cost == 0);
    CHECK(std::get<TokenConfig>(r0.final_state) == TokenConfig{0});

    auto r1 = replay(inst, MoveSequence{Move::slide(0, 1)});
    CHECK(r1.legal);
    CHECK(r1.cost == 1);
    CHECK(is_solution(inst, std::get<TokenConfig>(r1.final_state)));

    auto r2 = replay(inst, MoveSequence{Move::slide(0, 1), Move::slide(0, 1)});
    CHECK_FALSE(r2.legal);
    CHECK(r2.failed_index == 1);
}

TEST_CASE("moves are undone by their inverse") {
    Graph g = brute::cycle(5);
    Coloring c{1, 2, 3, 1, 2};
    for (Move m : {Move::flip(2, 1), Move::swap(0, 3), Move::cslide(0, 1)}) {
        Model model = m.kind == Move::Kind::Flip ? Model::Flip
                      : m.kind == Move::Kind::Swap ? Model::Swap : Model::ColorSlide;
        Coloring before = c, after = c;
        apply_move(g, model, 3, after, m);
        apply_move(g, model, 3, after, inverse_move(m, &before));
        CHECK(after == before);
    }
    TokenConfig s{0, 2};
    apply_move(g, Model::Slide, s, Move::slide(2, 3));
    apply_move(g, Model::Slide, s, inverse_move(Move::slide(2, 3)));
    CHECK(s == TokenConfig{0, 2});
}

TEST_CASE("instance validation and budget clamp") {
    CHECK_THROWS_AS(make_subset_instance(Problem::VertexCover, Model::Slide, brute::path(3), {5}, 1),
                    InvalidArgument);
    CHECK_THROWS_AS(make_coloring_instance(Model::Flip, brute::path(2), {0, 1}, 2, 1),
                    InvalidArgument);
    auto s = make_subset_instance(Problem::VertexCover, Model::Slide, brute::path(3), {0}, 1000);
    CHECK(s.budget == 9);
    auto c = make_coloring_instance(Model::Flip, brute::path(3), {1, 1, 1}, 2, 1000);
    CHECK(c.budget == 18);
}

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "solrec/graph.hpp"

namespace solrec {

enum class Problem { VertexCover, IndependentSet, DominatingSet, Coloring };
enum class Model { Slide, Jump, AddRemove, Flip, Swap, ColorSlide };

const char* to_string(Problem p);
const char* to_string(Model m);
bool is_subset_model(Model m);

// Set of occupied vertices, kept sorted and duplicate-free.
class TokenConfig {
public:
    TokenConfig() = default;
    // Throws InvalidArgument on a repeated vertex.
    explicit TokenConfig(std::vector<Vertex> vertices);
    TokenConfig(std::initializer_list<Vertex> vertices)
        : TokenConfig(std::vector<Vertex>(vertices)) {}

    const std::vector<Vertex>& vertices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool contains(Vertex x) const;
    void insert(Vertex x);
    void erase(Vertex x);

    friend bool operator==(const TokenConfig&, const TokenConfig&) = default;

private:
    std::vector<Vertex> v_;
};

// Colors are 1-based; coloring[v] is the color of vertex v.
using Coloring = std::vector<int>;

struct Move {
    enum class Kind { Slide, Jump, Add, Remove, Flip, Swap, ColorSlide };
    Kind kind = Kind::Slide;
    Vertex u = -1;
    Vertex v = -1;  // unused by add/remove/flip
    int color = 0;  // flip only

    static Move slide(Vertex a, Vertex b) { return {Kind::Slide, a, b, 0}; }
    static Move jump(Vertex a, Vertex b) { return {Kind::Jump, a, b, 0}; }
    static Move add(Vertex a) { return {Kind::Add, a, -1, 0}; }
    static Move remove(Vertex a) { return {Kind::Remove, a, -1, 0}; }
    static Move flip(Vertex a, int c) { return {Kind::Flip, a, -1, c}; }
    static Move swap(Vertex a, Vertex b) { return {Kind::Swap, a, b, 0}; }
    static Move cslide(Vertex a, Vertex b) { return {Kind::ColorSlide, a, b, 0}; }

    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

std::string to_string(const Move& m);

struct SubsetInstance {
    Problem problem = Problem::VertexCover;
    Model model = Model::Slide;
    Graph graph;
    TokenConfig start;
    int budget = 0;

    int k() const { return start.size(); }
};

struct ColoringInstance {
    Model model = Model::Flip;
    Graph graph;
    Coloring coloring;
    int colors = 2;
    int budget = 0;
};

using Instance = std::variant<SubsetInstance, ColoringInstance>;

// Validating constructors. The budget is clamped to n^2 for subset problems
// and 2n^2 for colorings; larger budgets never change the answer.
SubsetInstance make_subset_instance(Problem problem, Model model, Graph graph, TokenConfig start,
                                    std::int64_t budget);
ColoringInstance make_coloring_instance(Model model, Graph graph, Coloring coloring, int colors,
                                        std::int64_t budget);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set);
bool is_independent_set(const Graph& g, std::span<const Vertex> set);
bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

bool is_feasible(Problem problem, const Graph& g, const TokenConfig& config);
bool is_proper(const Graph& g, const Coloring& coloring);

// Feasible and of the start size.
bool is_solution(const SubsetInstance& inst, const TokenConfig& config);
bool is_solution(const ColoringInstance& inst, const Coloring& coloring);

// Throw IllegalMove naming the violated precondition.
void apply_move(const Graph& g, Model model, TokenConfig& state, const Move& move);
void apply_move(const Graph& g, Model model, int colors, Coloring& state, const Move& move);

// Inverse of a legal move given the state it was applied to.
Move inverse_move(const Move& move, const Coloring* before = nullptr);

struct ReplayResult {
    bool legal = true;
    int failed_index = -1;  // first illegal move
    std::string reason;
    int cost = 0;
    std::variant<TokenConfig, Coloring> final_state;
};

ReplayResult replay(const SubsetInstance& inst, std::span<const Move> seq);
ReplayResult replay(const ColoringInstance& inst, std::span<const Move> seq);
ReplayResult replay(const Instance& inst, std::span<const Move> seq);

struct SolveResult {
    bool yes = false;
    int min_moves = -1;  // minimum budget when known
    std::optional<MoveSequence> certificate;
    std::uint64_t explored = 0;
    std::string solver;
};

}  // namespace solrec

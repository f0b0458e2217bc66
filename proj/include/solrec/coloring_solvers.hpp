#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solrec/instance.hpp"
#include "solrec/oracle.hpp"

namespace solrec {

inline constexpr int kRed = 1;
inline constexpr int kGreen = 2;

// Orientation 1 wants L red and R green; orientation 2 the reverse.
struct ComponentChoice {
    int component = 0;
    std::vector<Vertex> left, right;
    int excess[2] = {0, 0};  // red count minus the number of vertices that should be red
    int budget[2] = {0, 0};  // red vertices that must turn green
};

// Per-component data for a 2-colored bipartite graph; nullopt if not bipartite.
std::optional<std::vector<ComponentChoice>> component_choices(const Graph& g, const Coloring& c);

struct FlowNetwork {
    struct Arc {
        int from, to;
        int capacity;
        int cost;
    };
    int num_nodes = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;

    int add_node() { return num_nodes++; }
    int add_arc(int from, int to, int capacity, int cost) {
        arcs.push_back({from, to, capacity, cost});
        return static_cast<int>(arcs.size()) - 1;
    }
};

struct FlowResult {
    int value = 0;
    std::int64_t cost = 0;
    std::vector<int> flow;  // per arc
};

// Successive shortest paths with Dijkstra on reduced costs. Arc costs must be
// non-negative.
FlowResult min_cost_max_flow(const FlowNetwork& net);

SolveResult solve_cd_flip_k2(const ColoringInstance& inst);
SolveResult solve_cd_swap_k2(const ColoringInstance& inst);
SolveResult solve_cd_slide_k2(const ColoringInstance& inst);

// Oracle search with the budget clamped to 2n^2.
SolveResult solve_cd_bounded(const ColoringInstance& inst, const OracleOptions& opts = {});

}  // namespace solrec

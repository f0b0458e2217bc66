#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solrec/graph.hpp"
#include "solrec/instance.hpp"

namespace solrec {

using CostMatrix = std::vector<std::vector<std::int64_t>>;

struct Assignment {
    std::vector<int> col_of_row;
    std::int64_t weight = 0;
    // Dual solution: u[i] + v[j] <= c[i][j], tight on matched pairs, and
    // v[j] <= 0 on unmatched columns.
    std::vector<std::int64_t> row_potential;
    std::vector<std::int64_t> col_potential;
};

// Hungarian method with potentials, O(r^2 c) for r rows and c >= r columns.
// Every row is matched to a distinct column.
Assignment min_weight_assignment(const CostMatrix& cost);

// Square matrices only; throws InvalidArgument otherwise.
Assignment min_weight_perfect_matching(const CostMatrix& cost);

// Among minimum-weight assignments, the lexicographically smallest
// col_of_row. Potentials are those of the unrestricted optimum.
Assignment lexicographic_min_assignment(const CostMatrix& cost);

// Checks the dual certificate carried by `a`.
bool certifies_optimality(const CostMatrix& cost, const Assignment& a);

// Appends zero-rows or columns filled with `fill` until square.
CostMatrix pad_square(const CostMatrix& cost, std::int64_t fill = 0);

inline constexpr int kNoCap = 1 << 28;

// Weight used for token/target pairs in different components.
inline std::int64_t unreachable_cost(const Graph& g, int cap) {
    return static_cast<std::int64_t>(g.num_edges()) + cap + 1;
}

struct SlidingPlan {
    int cost = 0;
    std::vector<int> assignment;  // source index -> target index
};

// Minimum total slide count moving `source` onto `target` as sets, or nullopt
// when it exceeds `cap` or a token cannot reach any free target.
std::optional<SlidingPlan> sliding_plan(const Graph& g, const TokenConfig& source,
                                        const TokenConfig& target, int cap = kNoCap);
std::optional<int> sliding_cost(const Graph& g, const TokenConfig& source,
                                const TokenConfig& target, int cap = kNoCap);

// Slide sequence realizing `assignment` (source index -> target index) with
// exactly as many slides as its total distance, for optimal assignments.
MoveSequence extract_slide_schedule(const Graph& g, const TokenConfig& source,
                                    const TokenConfig& target, const std::vector<int>& assignment);

// Exchanges the colors at the ends of `path` with 2d - 1 color slides, d the
// number of path edges; interior colors end where they started.
MoveSequence swap_colors_via_sliding(const Graph& g, Vertex u, Vertex v,
                                     const std::vector<Vertex>& path);

}  // namespace solrec

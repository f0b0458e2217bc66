#pragma once

#include <vector>

#include "solrec/graph.hpp"

namespace solrec {

// Rooted tree decomposition. Bags are sorted vertex lists.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<int> parent;  // -1 for the root
    int root = -1;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<int>> children() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    Vertex vertex = -1;          // introduced / forgotten vertex
    std::vector<int> children;   // 0, 1 or 2 entries
    std::vector<Vertex> bag;     // sorted
};

// Nodes are stored in post-order: every child precedes its parent, the root is last.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
    TreeDecomposition as_tree_decomposition() const;
};

enum class DecompositionMode { Heuristic, Exact };

inline constexpr int kDefaultExactLimit = 18;

// Throws InvalidDecomposition describing the first violated condition.
void validate(const Graph& g, const TreeDecomposition& td);
void validate(const Graph& g, const NiceTreeDecomposition& ntd);

// Decomposition from an elimination ordering (first entry eliminated first).
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

std::vector<Vertex> min_fill_ordering(const Graph& g);

// Optimal elimination ordering via subset dynamic programming; throws
// ExactLimitExceeded when n > exact_limit.
std::vector<Vertex> exact_treewidth_ordering(const Graph& g, int exact_limit = kDefaultExactLimit);

int treewidth_exact(const Graph& g, int exact_limit = kDefaultExactLimit);

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

NiceTreeDecomposition tree_decomposition(const Graph& g, DecompositionMode mode,
                                         int exact_limit = kDefaultExactLimit);

}  // namespace solrec

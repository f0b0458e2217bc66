#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace solrec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Hop distance; kUnreachable compares greater than every real distance.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Saturating addition for distances.
inline int add_distance(int a, int b) {
    if (a == kUnreachable || b == kUnreachable) return kUnreachable;
    return a + b;
}

// Undirected simple graph on dense vertex ids [0, n). Immutable once built.
class Graph {
public:
    Graph() = default;
    // Throws InvalidArgument on self-loops, duplicate edges or ids out of range.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Sorted adjacency of v.
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    // Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    // Graph on the same vertex set with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    // Induced subgraph on `keep` (renumbered in the given order).
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Incremental edge collector used by the gadget generators.
class GraphBuilder {
public:
    Vertex add_vertex() { return n_++; }
    Vertex add_vertices(int count) {
        Vertex first = n_;
        n_ += count;
        return first;
    }
    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    int num_vertices() const { return n_; }
    Graph build() const { return Graph(n_, edges_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

std::vector<int> bfs_distances(const Graph& g, Vertex source);

// All-pairs hop distances, row-major n x n.
std::vector<int> all_pairs_distances(const Graph& g);

// One shortest path source -> target inclusive of both ends; empty if unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex source, Vertex target);

struct Components {
    std::vector<int> component_of;              // per vertex
    std::vector<std::vector<Vertex>> members;   // sorted, ordered by smallest member
    int count() const { return static_cast<int>(members.size()); }
};

Components connected_components(const Graph& g);

struct Bipartition {
    // side[v] == 0 means v is in L of its component, 1 means R. The smallest
    // vertex of each component lies in L.
    std::vector<int> side;
    Components components;
    std::vector<Vertex> left(int component) const;
    std::vector<Vertex> right(int component) const;
};

// Closed walk v0 v1 ... v_{len-1} (v_{len-1} adjacent to v0) of odd length.
struct OddCycle {
    std::vector<Vertex> cycle;
};

using BipartitionResult = std::variant<Bipartition, OddCycle>;

BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct DegeneracyOrder {
    int degeneracy = 0;
    std::vector<Vertex> order;  // peeling order, each vertex has <= degeneracy later neighbours
};

DegeneracyOrder degeneracy_order(const Graph& g);

}  // namespace solrec

#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the solvers under test; only Graph and the instance structs are
// shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "solrec/graph.hpp"
#include "solrec/instance.hpp"

namespace brute {

using solrec::ColoringInstance;
using solrec::Edge;
using solrec::Graph;
using solrec::Model;
using solrec::Problem;
using solrec::SubsetInstance;
using solrec::Vertex;
using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline Mask mask_of(const std::vector<Vertex>& vs) {
    Mask m = 0;
    for (Vertex v : vs) m |= bit(v);
    return m;
}

inline std::vector<Vertex> members(Mask m) {
    std::vector<Vertex> out;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

inline std::vector<Mask> adjacency(const Graph& g) {
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

inline bool feasible(Problem p, const Graph& g, Mask m) {
    const int n = g.num_vertices();
    switch (p) {
        case Problem::VertexCover:
            for (auto [u, v] : g.edges())
                if (!(m & bit(u)) && !(m & bit(v))) return false;
            return true;
        case Problem::IndependentSet:
            for (auto [u, v] : g.edges())
                if ((m & bit(u)) && (m & bit(v))) return false;
            return true;
        case Problem::DominatingSet: {
            auto adj = adjacency(g);
            for (int v = 0; v < n; ++v)
                if (!(m & bit(v)) && !(adj[v] & m)) return false;
            return true;
        }
        default: return false;
    }
}

// ---- assignment -----------------------------------------------------------

// Minimum over injections rows -> columns, by trying every column ordering.
inline std::int64_t permutation_assignment(const std::vector<std::vector<std::int64_t>>& c) {
    const int r = static_cast<int>(c.size());
    if (r == 0) return 0;
    const int cols = static_cast<int>(c[0].size());
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = INT64_MAX;
    do {
        std::int64_t w = 0;
        for (int i = 0; i < r; ++i) w += c[i][perm[i]];
        best = std::min(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---- token reconfiguration -------------------------------------------------

template <class Visit>
void token_successors(const Graph& g, Model model, const std::vector<Mask>& adj, Mask s,
                      Visit visit) {
    const int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
        if (model == Model::AddRemove) {
            visit(s ^ bit(u));
            continue;
        }
        if (!(s & bit(u))) continue;
        for (int v = 0; v < n; ++v) {
            if (s & bit(v)) continue;
            if (model == Model::Slide && !(adj[u] & bit(v))) continue;
            visit((s & ~bit(u)) | bit(v));
        }
    }
}

// Minimum moves to a feasible configuration of the start size within the
// budget, or -1.
inline int subset_min(const SubsetInstance& inst) {
    const Graph& g = inst.graph;
    const auto adj = adjacency(g);
    const int k = inst.k();
    const Mask start = mask_of(inst.start.vertices());
    auto goal = [&](Mask m) { return std::popcount(m) == k && feasible(inst.problem, g, m); };
    std::unordered_map<Mask, int> dist{{start, 0}};
    std::deque<Mask> q{start};
    while (!q.empty()) {
        Mask s = q.front();
        q.pop_front();
        const int d = dist[s];
        if (goal(s)) return d;
        if (d == inst.budget) continue;
        token_successors(g, inst.model, adj, s, [&](Mask t) {
            if (dist.emplace(t, d + 1).second) q.push_back(t);
        });
    }
    return -1;
}

// Minimum slides from `s` to exactly `t`, or -1.
inline int reach_min(const Graph& g, Mask s, Mask t) {
    const auto adj = adjacency(g);
    std::unordered_map<Mask, int> dist{{s, 0}};
    std::deque<Mask> q{s};
    while (!q.empty()) {
        Mask x = q.front();
        q.pop_front();
        if (x == t) return dist[x];
        const int d = dist[x];
        token_successors(g, Model::Slide, adj, x, [&](Mask y) {
            if (dist.emplace(y, d + 1).second) q.push_back(y);
        });
    }
    return -1;
}

// ---- coloring reconfiguration ----------------------------------------------

inline bool proper(const Graph& g, const std::vector<int>& c) {
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

// Minimum moves to a proper coloring within the budget, or -1.
inline int coloring_min(const ColoringInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    std::map<std::vector<int>, int> dist{{inst.coloring, 0}};
    std::deque<std::vector<int>> q{inst.coloring};
    while (!q.empty()) {
        auto c = q.front();
        q.pop_front();
        const int d = dist[c];
        if (proper(g, c)) return d;
        if (d == inst.budget) continue;
        auto push = [&](std::vector<int> next) {
            if (dist.emplace(next, d + 1).second) q.push_back(std::move(next));
        };
        if (inst.model == Model::Flip) {
            for (int v = 0; v < n; ++v)
                for (int col = 1; col <= inst.colors; ++col)
                    if (col != c[v]) {
                        auto next = c;
                        next[v] = col;
                        push(next);
                    }
        } else {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (inst.model == Model::ColorSlide && !g.has_edge(u, v)) continue;
                    if (c[u] == c[v]) continue;
                    auto next = c;
                    std::swap(next[u], next[v]);
                    push(next);
                }
        }
    }
    return -1;
}

// ---- base problems -------------------------------------------------------

inline int min_feasible_size(Problem p, const Graph& g) {
    const int n = g.num_vertices();
    int best = n;
    for (Mask m = 0; m < bit(n); ++m)
        if (feasible(p, g, m)) best = std::min(best, std::popcount(m));
    return best;
}

inline int max_independent_set(const Graph& g) {
    const int n = g.num_vertices();
    int best = 0;
    for (Mask m = 0; m < bit(n); ++m)
        if (feasible(Problem::IndependentSet, g, m)) best = std::max(best, std::popcount(m));
    return best;
}

inline bool is_clique(const Graph& g, Mask m) {
    auto vs = members(m);
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b])) return false;
    return true;
}

inline int max_clique(const Graph& g) {
    const int n = g.num_vertices();
    int best = 0;
    for (Mask m = 0; m < bit(n); ++m)
        if (is_clique(g, m)) best = std::max(best, std::popcount(m));
    return best;
}

// One vertex from each of the `parts` parts, pairwise independent (or
// pairwise adjacent when `clique`).
inline bool multicolored(const Graph& g, const std::vector<int>& part, int parts, bool clique) {
    const int n = g.num_vertices();
    for (Mask m = 0; m < bit(n); ++m) {
        if (std::popcount(m) != parts) continue;
        Mask seen = 0;
        bool ok = true;
        for (Vertex v : members(m)) {
            if (seen & bit(part[v])) ok = false;
            seen |= bit(part[v]);
        }
        if (!ok) continue;
        if (clique ? is_clique(g, m) : feasible(Problem::IndependentSet, g, m)) return true;
    }
    return false;
}

// Proper coloring with c[v] in lists[v], by backtracking over vertex order.
inline bool list_colorable(const Graph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.num_vertices();
    std::vector<int> c(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int col : lists[v]) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (w < v && c[w] == col) ok = false;
            if (!ok) continue;
            c[v] = col;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool precoloring_extends(const Graph& g, const std::vector<int>& pre, int r) {
    std::vector<std::vector<int>> lists(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (pre[v]) lists[v] = {pre[v]};
        else
            for (int c = 1; c <= r; ++c) lists[v].push_back(c);
    }
    return list_colorable(g, lists);
}

// ---- graph families ------------------------------------------------------

inline Graph from_mask(int n, std::uint32_t edge_mask) {
    std::vector<Edge> edges;
    int bitpos = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bitpos)
            if (edge_mask >> bitpos & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline bool connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

inline bool two_colorable(const Graph& g) {
    std::vector<std::vector<int>> lists(g.num_vertices(), {1, 2});
    return list_colorable(g, lists);
}

// Every labeled graph on n vertices, n <= 7.
inline std::vector<Graph> labeled_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint32_t m = 0; m < (1u << pairs); ++m) out.push_back(from_mask(n, m));
    return out;
}

// Smallest edge code over all relabelings; equal exactly for isomorphic graphs.
inline std::uint32_t canonical_code(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        std::uint32_t code = 0;
        for (auto [u, v] : g.edges()) {
            int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
            code |= 1u << (a * n - a * (a + 1) / 2 + (b - a - 1));
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// One representative per isomorphism class, n <= 6.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> canon;
    std::vector<Graph> out;
    for (std::uint32_t m = 0; m < (1u << pairs); ++m) {
        Graph g = from_mask(n, m);
        if (canon.insert(canonical_code(g)).second) out.push_back(g);
    }
    return out;
}

// Connected bipartite graphs up to isomorphism, n <= 7. Classes on n vertices
// come from bipartite classes on n - 1 vertices plus one new vertex.
inline std::vector<Graph> connected_bipartite_graphs(int n) {
    std::vector<Graph> out;
    if (n <= 6) {
        for (const Graph& g : nonisomorphic_graphs(n))
            if (connected(g) && two_colorable(g)) out.push_back(g);
        return out;
    }
    std::set<std::uint32_t> canon;
    for (const Graph& h : nonisomorphic_graphs(n - 1)) {
        if (!two_colorable(h)) continue;
        for (Mask nb = 1; nb < bit(n - 1); ++nb) {
            std::vector<Edge> e = h.edges();
            for (Vertex v : members(nb)) e.emplace_back(v, n - 1);
            Graph g(n, e);
            if (!connected(g) || !two_colorable(g)) continue;
            if (canon.insert(canonical_code(g)).second) out.push_back(g);
        }
    }
    return out;
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.emplace_back(pick(rng), v);
    }
    return Graph(n, e);
}

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
    const Graph tree = random_tree(n, rng);
    std::set<Edge> e(tree.edges().begin(), tree.edges().end());
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.insert({u, v});
    std::vector<Edge> list(e.begin(), e.end());
    return Graph(n, list);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> e;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

// Random graph of treewidth at most w: a random w-tree with edges dropped.
inline Graph random_partial_ktree(int n, int w, double keep, std::mt19937_64& rng) {
    std::set<Edge> e;
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> first;
    for (int v = 0; v < std::min(n, w + 1); ++v) {
        for (Vertex u : first) e.insert({u, v});
        first.push_back(v);
    }
    cliques.push_back(first);
    for (int v = w + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        auto base = cliques[pick(rng)];
        std::uniform_int_distribution<std::size_t> drop(0, base.size() - 1);
        base.erase(base.begin() + static_cast<long>(drop(rng)));
        for (Vertex u : base) e.insert({u, v});
        base.push_back(v);
        cliques.push_back(base);
    }
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> list;
    for (auto ed : e)
        if (coin(rng)) list.push_back(ed);
    return Graph(n, list);
}

inline std::vector<Vertex> random_subset(int n, int k, std::mt19937_64& rng) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace brute

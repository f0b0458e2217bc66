#include "solrec/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InvalidArgument("duplicate edge {" + std::to_string(dup->first) + "," +
                              std::to_string(dup->second) + "}");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
    return Graph(n_, es);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return Graph(static_cast<int>(keep.size()), es);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.num_vertices(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> d(static_cast<std::size_t>(n) * n);
    for (Vertex s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
    return d;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex source, Vertex target) {
    // BFS from target so that walking parents from source yields the path in order.
    std::vector<Vertex> next(g.num_vertices(), -1);
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<Vertex> queue{target};
    seen[target] = true;
    while (!queue.empty() && !seen[source]) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (seen[w]) continue;
            seen[w] = true;
            next[w] = u;
            queue.push_back(w);
        }
    }
    if (!seen[source]) return {};
    std::vector<Vertex> path{source};
    for (Vertex v = source; v != target; v = next[v]) path.push_back(next[v]);
    return path;
}

Components connected_components(const Graph& g) {
    Components c;
    c.component_of.assign(g.num_vertices(), -1);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (c.component_of[s] >= 0) continue;
        int id = c.count();
        c.members.emplace_back();
        std::deque<Vertex> queue{s};
        c.component_of[s] = id;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            c.members[id].push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (c.component_of[w] >= 0) continue;
                c.component_of[w] = id;
                queue.push_back(w);
            }
        }
        std::sort(c.members[id].begin(), c.members[id].end());
    }
    return c;
}

std::vector<Vertex> Bipartition::left(int component) const {
    std::vector<Vertex> out;
    for (Vertex v : components.members[component])
        if (side[v] == 0) out.push_back(v);
    return out;
}

std::vector<Vertex> Bipartition::right(int component) const {
    std::vector<Vertex> out;
    for (Vertex v : components.members[component])
        if (side[v] == 1) out.push_back(v);
    return out;
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.num_vertices();
    Bipartition result;
    result.components = connected_components(g);
    result.side.assign(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    for (const auto& comp : result.components.members) {
        Vertex root = comp.front();
        result.side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (result.side[w] < 0) {
                    result.side[w] = 1 - result.side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (result.side[w] == result.side[u]) {
                    // Same BFS parity: tree paths to the common ancestor plus {u,w}
                    // close an odd cycle.
                    std::vector<Vertex> up_u{u}, up_w{w};
                    Vertex a = u, b = w;
                    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) up_w.push_back(b = parent[b]);
                    while (a != b) {
                        up_u.push_back(a = parent[a]);
                        up_w.push_back(b = parent[b]);
                    }
                    up_w.pop_back();  // common ancestor already in up_u
                    OddCycle oc;
                    oc.cycle = std::move(up_u);
                    oc.cycle.insert(oc.cycle.end(), up_w.rbegin(), up_w.rend());
                    return oc;
                }
            }
        }
    }
    return result;
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<Bipartition>(bipartition(g)); }

DegeneracyOrder degeneracy_order(const Graph& g) {
    const int n = g.num_vertices();
    DegeneracyOrder out;
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue;
        removed[v] = true;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            heap.emplace(--deg[w], w);
        }
    }
    return out;
}

}  // namespace solrec

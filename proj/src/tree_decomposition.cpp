#include "solrec/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

namespace {

int bag_width(const std::vector<Vertex>& bag) { return static_cast<int>(bag.size()) - 1; }

bool bag_contains(const std::vector<Vertex>& bag, Vertex v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, bag_width(b));
    return w;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> kids(bags.size());
    for (int i = 0; i < num_nodes(); ++i)
        if (parent[i] >= 0) kids[parent[i]].push_back(i);
    return kids;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, bag_width(node.bag));
    return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    td.bags.reserve(nodes.size());
    td.parent.assign(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (int c : nodes[i].children) td.parent[c] = static_cast<int>(i);
    }
    td.root = root();
    return td;
}

void validate(const Graph& g, const TreeDecomposition& td) {
    const int n = g.num_vertices();
    const int nodes = td.num_nodes();
    if (nodes == 0) throw InvalidDecomposition("decomposition has no nodes");
    if (static_cast<int>(td.parent.size()) != nodes)
        throw InvalidDecomposition("parent array size mismatch");
    if (td.root < 0 || td.root >= nodes || td.parent[td.root] != -1)
        throw InvalidDecomposition("root is not a parentless node");
    for (int i = 0; i < nodes; ++i) {
        if (i != td.root && (td.parent[i] < 0 || td.parent[i] >= nodes))
            throw InvalidDecomposition("node " + std::to_string(i) + " has no valid parent");
        const auto& bag = td.bags[i];
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw InvalidDecomposition("bag " + std::to_string(i) + " is not a sorted set");
        for (Vertex v : bag)
            if (!g.contains(v))
                throw InvalidDecomposition("bag " + std::to_string(i) + " holds vertex " +
                                           std::to_string(v) + " outside the graph");
    }
    // Every node must reach the root without revisiting.
    for (int i = 0; i < nodes; ++i) {
        int cur = i;
        for (int steps = 0; cur != td.root; ++steps) {
            if (steps > nodes) throw InvalidDecomposition("parent pointers form a cycle");
            cur = td.parent[cur];
        }
    }
    // Running intersection: nodes holding v form one subtree iff exactly one of
    // them has a parent outside the set.
    std::vector<int> tops(n, 0), occurrences(n, 0);
    for (int i = 0; i < nodes; ++i) {
        for (Vertex v : td.bags[i]) {
            ++occurrences[v];
            int p = td.parent[i];
            if (p < 0 || !bag_contains(td.bags[p], v)) ++tops[v];
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (occurrences[v] == 0)
            throw InvalidDecomposition("vertex " + std::to_string(v) + " appears in no bag");
        if (tops[v] != 1)
            throw InvalidDecomposition("bags containing vertex " + std::to_string(v) +
                                       " are not connected");
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < nodes && !covered; ++i)
            covered = bag_contains(td.bags[i], u) && bag_contains(td.bags[i], v);
        if (!covered)
            throw InvalidDecomposition("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} is in no bag");
    }
}

void validate(const Graph& g, const NiceTreeDecomposition& ntd) {
    if (ntd.nodes.empty()) throw InvalidDecomposition("decomposition has no nodes");
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
        const auto& node = ntd.nodes[i];
        const std::string where = "node " + std::to_string(i);
        for (int c : node.children)
            if (c < 0 || c >= static_cast<int>(i))
                throw InvalidDecomposition(where + " has a child that is not stored before it");
        switch (node.kind) {
            case NiceKind::Leaf:
                if (!node.children.empty() || !node.bag.empty())
                    throw InvalidDecomposition(where + ": leaf must be childless with empty bag");
                break;
            case NiceKind::Introduce: {
                if (node.children.size() != 1)
                    throw InvalidDecomposition(where + ": introduce needs one child");
                auto expect = ntd.nodes[node.children[0]].bag;
                if (bag_contains(expect, node.vertex))
                    throw InvalidDecomposition(where + ": introduced vertex already in child");
                expect.insert(std::upper_bound(expect.begin(), expect.end(), node.vertex),
                              node.vertex);
                if (expect != node.bag)
                    throw InvalidDecomposition(where + ": introduce bag mismatch");
                break;
            }
            case NiceKind::Forget: {
                if (node.children.size() != 1)
                    throw InvalidDecomposition(where + ": forget needs one child");
                auto expect = ntd.nodes[node.children[0]].bag;
                auto it = std::lower_bound(expect.begin(), expect.end(), node.vertex);
                if (it == expect.end() || *it != node.vertex)
                    throw InvalidDecomposition(where + ": forgotten vertex not in child");
                expect.erase(it);
                if (expect != node.bag) throw InvalidDecomposition(where + ": forget bag mismatch");
                break;
            }
            case NiceKind::Join:
                if (node.children.size() != 2 || ntd.nodes[node.children[0]].bag != node.bag ||
                    ntd.nodes[node.children[1]].bag != node.bag)
                    throw InvalidDecomposition(where + ": join needs two children with equal bags");
                break;
        }
    }
    if (!ntd.nodes.back().bag.empty()) throw InvalidDecomposition("root bag is not empty");
    // Every non-root node must have exactly one parent.
    std::vector<int> parents(ntd.nodes.size(), 0);
    for (const auto& node : ntd.nodes)
        for (int c : node.children) ++parents[c];
    for (std::size_t i = 0; i + 1 < ntd.nodes.size(); ++i)
        if (parents[i] != 1)
            throw InvalidDecomposition("node " + std::to_string(i) + " does not have one parent");
    validate(g, ntd.as_tree_decomposition());
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.bags = {{}};
        td.parent = {-1};
        td.root = 0;
        return td;
    }
    if (static_cast<int>(order.size()) != n) throw InvalidArgument("ordering size mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    td.bags.resize(n);
    td.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> later(adj[v].begin(), adj[v].end());
        for (Vertex a : later) {
            adj[a].erase(v);
            for (Vertex b : later)
                if (a != b) adj[a].insert(b);
        }
        auto& bag = td.bags[i];
        bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        if (!later.empty()) {
            Vertex first = *std::min_element(later.begin(), later.end(),
                                             [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
            td.parent[i] = pos[first];
        }
    }
    td.root = n - 1;
    for (int i = 0; i < n - 1; ++i)
        if (td.parent[i] < 0) td.parent[i] = td.root;
    return td;
}

std::vector<Vertex> min_fill_ordering(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> done(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long best_fill = 0;
        int best_deg = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (done[v]) continue;
            long fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].count(*b)) ++fill;
            int deg = static_cast<int>(adj[v].size());
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        done[best] = true;
        order.push_back(best);
        std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
        for (Vertex a : nb) {
            adj[a].erase(best);
            for (Vertex b : nb)
                if (a != b) adj[a].insert(b);
        }
        adj[best].clear();
    }
    return order;
}

std::vector<Vertex> exact_treewidth_ordering(const Graph& g, int exact_limit) {
    const int n = g.num_vertices();
    if (n > exact_limit || n > 30)
        throw ExactLimitExceeded("exact tree decomposition limited to " +
                                 std::to_string(std::min(exact_limit, 30)) + " vertices, graph has " +
                                 std::to_string(n));
    if (n == 0) return {};
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    // |Q(S, v)|: vertices outside S + v reachable from v through S.
    auto q_size = [&](std::uint32_t s, Vertex v) {
        std::uint32_t reach = adj[v];
        std::uint32_t frontier = reach & s;
        std::uint32_t expanded = 0;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            expanded |= 1u << x;
            std::uint32_t fresh = adj[x] & ~reach & ~(1u << v);
            reach |= fresh;
            frontier |= fresh & s & ~expanded;
        }
        return std::popcount(reach & ~s & ~(1u << v));
    };
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
    tw[0] = -1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = 127;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint32_t without = s & ~(1u << v);
            int cand = std::max<int>(tw[without], q_size(without, v));
            if (cand < best) {
                best = cand;
                last[s] = static_cast<std::int8_t>(v);
            }
        }
        tw[s] = static_cast<std::int8_t>(best);
        if (s == full) break;
    }
    std::vector<Vertex> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = last[s];
        s &= ~(1u << last[s]);
    }
    return order;
}

int treewidth_exact(const Graph& g, int exact_limit) {
    return decomposition_from_ordering(g, exact_treewidth_ordering(g, exact_limit)).width();
}

namespace {

class NiceBuilder {
public:
    explicit NiceBuilder(const TreeDecomposition& td) : td_(td), kids_(td.children()) {}

    NiceTreeDecomposition run() {
        int top = build(td_.root);
        for (Vertex v : td_.bags[td_.root]) top = forget(top, v);
        return std::move(out_);
    }

private:
    int push(NiceNode node) {
        out_.nodes.push_back(std::move(node));
        return static_cast<int>(out_.nodes.size()) - 1;
    }
    int leaf() { return push({NiceKind::Leaf, -1, {}, {}}); }
    int introduce(int child, Vertex v) {
        auto bag = out_.nodes[child].bag;
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        return push({NiceKind::Introduce, v, {child}, std::move(bag)});
    }
    int forget(int child, Vertex v) {
        auto bag = out_.nodes[child].bag;
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        return push({NiceKind::Forget, v, {child}, std::move(bag)});
    }
    int join(int a, int b) { return push({NiceKind::Join, -1, {a, b}, out_.nodes[a].bag}); }

    int transition(int node, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        for (Vertex v : from)
            if (!bag_contains(to, v)) node = forget(node, v);
        for (Vertex v : to)
            if (!bag_contains(from, v)) node = introduce(node, v);
        return node;
    }

    int build(int t) {
        const auto& bag = td_.bags[t];
        if (kids_[t].empty()) {
            int cur = leaf();
            for (Vertex v : bag) cur = introduce(cur, v);
            return cur;
        }
        int cur = -1;
        for (int c : kids_[t]) {
            int chain = transition(build(c), td_.bags[c], bag);
            cur = cur < 0 ? chain : join(cur, chain);
        }
        return cur;
    }

    const TreeDecomposition& td_;
    std::vector<std::vector<int>> kids_;
    NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) { return NiceBuilder(td).run(); }

NiceTreeDecomposition tree_decomposition(const Graph& g, DecompositionMode mode, int exact_limit) {
    auto order = mode == DecompositionMode::Exact ? exact_treewidth_ordering(g, exact_limit)
                                                   : min_fill_ordering(g);
    return make_nice(decomposition_from_ordering(g, order));
}

}  // namespace solrec

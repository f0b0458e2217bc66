#include "solrec/treewidth_dp.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>

#include "solrec/errors.hpp"

namespace solrec {

// B(u) for a bag vertex u is the net number of tokens u still has to receive
// over edges not yet processed: [u in T] - [u in S] minus the net inflow over
// processed edges. An edge is processed when its first endpoint is forgotten,
// so it is seen exactly once even when both ends sit in a join bag. Forgetting
// v picks f(u), the net flow from each bag neighbour u into v, at |f(u)|
// slides each, so that B(v) reaches 0.

namespace {

using Bits = std::vector<std::uint64_t>;

int words_for(int budget) { return budget / 64 + 1; }

void trim(Bits& bits, int budget) {
    const int last = budget % 64;
    if (last != 63) bits.back() &= (1ull << (last + 1)) - 1;
}

bool any(const Bits& bits) {
    return std::any_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
}

int lowest(const Bits& bits) {
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) return static_cast<int>(i * 64) + std::countr_zero(bits[i]);
    return -1;
}

// dst |= src << shift, truncated at budget.
void or_shifted(Bits& dst, const Bits& src, int shift, int budget) {
    const int ws = shift / 64, bs = shift % 64;
    const int n = static_cast<int>(dst.size());
    for (int i = n - 1; i >= ws; --i) {
        std::uint64_t w = src[i - ws] << bs;
        if (bs && i - ws - 1 >= 0) w |= src[i - ws - 1] >> (64 - bs);
        dst[i] |= w;
    }
    trim(dst, budget);
}

void merge(DPTable& t, std::string key, const Bits& bits, int budget) {
    auto [it, fresh] = t.entries.try_emplace(std::move(key), bits.size(), 0);
    or_shifted(it->second, bits, 0, budget);
}

int bound(const DPContext& ctx) { return ctx.k + 1; }

void prune(const DPContext& ctx, DPTable& t) {
    std::erase_if(t.entries, [&](const auto& kv) {
        int q;
        std::vector<int> a, b;
        DPTable::decode(kv.first, q, a, b);
        return !any(kv.second) || locally_invalid(ctx, t, b);
    });
}

int position(const std::vector<Vertex>& bag, Vertex v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

}  // namespace

DPContext DPContext::from(const SubsetInstance& inst) {
    if (inst.problem != Problem::VertexCover && inst.problem != Problem::IndependentSet)
        throw SolverInapplicable("tw-dp handles vertex cover and independent set only");
    if (inst.model != Model::Slide) throw SolverInapplicable("tw-dp needs the slide model");
    if (inst.k() > 120) throw SolverInapplicable("tw-dp supports at most 120 tokens");
    DPContext ctx;
    ctx.graph = &inst.graph;
    ctx.problem = inst.problem;
    ctx.in_start.assign(inst.graph.num_vertices(), 0);
    for (Vertex v : inst.start.vertices()) ctx.in_start[v] = 1;
    ctx.k = inst.k();
    ctx.budget = inst.budget;
    return ctx;
}

std::string DPTable::key(int q, const std::vector<int>& a, const std::vector<int>& b) {
    std::string s(1 + 2 * a.size(), '\0');
    s[0] = static_cast<char>(q);
    for (std::size_t i = 0; i < a.size(); ++i) {
        s[1 + i] = static_cast<char>(a[i]);
        s[1 + a.size() + i] = static_cast<char>(static_cast<signed char>(b[i]));
    }
    return s;
}

void DPTable::decode(const std::string& key, int& q, std::vector<int>& a, std::vector<int>& b) {
    const std::size_t t = (key.size() - 1) / 2;
    q = static_cast<unsigned char>(key[0]);
    a.resize(t);
    b.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        a[i] = key[1 + i];
        b[i] = static_cast<signed char>(key[1 + t + i]);
    }
}

bool DPTable::sol(int q, int l, const std::vector<int>& a, const std::vector<int>& b) const {
    auto it = entries.find(key(q, a, b));
    if (it == entries.end() || l < 0 || l >= static_cast<int>(it->second.size() * 64)) return false;
    return (it->second[l / 64] >> (l % 64)) & 1;
}

std::optional<int> DPTable::min_budget(int q, const std::vector<int>& a, const std::vector<int>& b) const {
    auto it = entries.find(key(q, a, b));
    if (it == entries.end() || !any(it->second)) return std::nullopt;
    return lowest(it->second);
}

bool locally_invalid(const DPContext& ctx, const DPTable& table, const std::vector<int>& b) {
    for (std::size_t i = 0; i < table.bag.size(); ++i) {
        if (b[i] == 0) continue;
        const Vertex u = table.bag[i];
        bool closed = true;
        for (Vertex w : ctx.graph->neighbors(u))
            if (!table.subtree[w] || std::binary_search(table.bag.begin(), table.bag.end(), w)) {
                closed = false;
                break;
            }
        if (closed) return true;
    }
    return false;
}

DPTable dp_leaf(const DPContext& ctx) {
    DPTable t;
    t.subtree.assign(ctx.graph->num_vertices(), 0);
    Bits bits(words_for(ctx.budget), 0);
    bits[0] = 1;
    t.entries.emplace(DPTable::key(0, {}, {}), bits);
    return t;
}

DPTable dp_introduce(const DPContext& ctx, const DPTable& child, Vertex v) {
    const Graph& g = *ctx.graph;
    DPTable t;
    t.bag = child.bag;
    const int pv = position(t.bag, v);
    if (pv < static_cast<int>(t.bag.size()) && t.bag[pv] == v)
        throw InvalidDecomposition("introduced vertex already in bag");
    t.bag.insert(t.bag.begin() + pv, v);
    t.subtree = child.subtree;
    t.subtree[v] = 1;
    std::vector<int> nbr;
    for (std::size_t i = 0; i < child.bag.size(); ++i)
        if (g.has_edge(v, child.bag[i])) nbr.push_back(static_cast<int>(i));
    const int start = ctx.in_start[v];

    int q;
    std::vector<int> a, b;
    for (const auto& [ckey, bits] : child.entries) {
        DPTable::decode(ckey, q, a, b);
        for (int av = 0; av <= 1; ++av) {
            if (q + av > ctx.k) continue;
            bool ok = true;
            for (int i : nbr) {
                if (ctx.problem == Problem::VertexCover && av == 0 && a[i] == 0) ok = false;
                if (ctx.problem == Problem::IndependentSet && av == 1 && a[i] == 1) ok = false;
            }
            if (!ok) continue;
            auto na = a, nb = b;
            na.insert(na.begin() + pv, av);
            nb.insert(nb.begin() + pv, av - start);
            merge(t, DPTable::key(q + av, na, nb), bits, ctx.budget);
        }
    }
    prune(ctx, t);
    return t;
}

DPTable dp_forget(const DPContext& ctx, const DPTable& child, Vertex v) {
    const Graph& g = *ctx.graph;
    DPTable t;
    const int pv = position(child.bag, v);
    if (pv >= static_cast<int>(child.bag.size()) || child.bag[pv] != v)
        throw InvalidDecomposition("forgotten vertex not in bag");
    t.bag = child.bag;
    t.bag.erase(t.bag.begin() + pv);
    t.subtree = child.subtree;
    // Bag neighbours of v after the forget.
    std::vector<int> nbr;
    for (std::size_t i = 0; i < t.bag.size(); ++i)
        if (g.has_edge(v, t.bag[i])) nbr.push_back(static_cast<int>(i));
    const int lim = bound(ctx);

    int q;
    std::vector<int> a, b, nb;
    std::vector<int> f(nbr.size(), 0);
    Bits shifted(words_for(ctx.budget));
    for (const auto& [ckey, bits] : child.entries) {
        DPTable::decode(ckey, q, a, b);
        const int used = lowest(bits);
        if (used < 0) continue;
        const int need = b[pv];
        a.erase(a.begin() + pv);
        b.erase(b.begin() + pv);
        // f[j] tokens move from bag neighbour j into v; they must settle B(v).
        auto emit = [&](int den) {
            nb = b;
            for (std::size_t j = 0; j < nbr.size(); ++j) nb[nbr[j]] += f[j];
            std::fill(shifted.begin(), shifted.end(), 0);
            or_shifted(shifted, bits, den, ctx.budget);
            if (any(shifted)) merge(t, DPTable::key(q, a, nb), shifted, ctx.budget);
        };
        auto rec = [&](auto&& self, std::size_t j, int den, int rest) -> void {
            const int room = ctx.budget - used - den;
            if (std::abs(rest) > room) return;
            if (j + 1 >= nbr.size()) {
                if (nbr.empty()) {
                    if (rest == 0) emit(den);
                    return;
                }
                if (std::abs(b[nbr[j]] + rest) > lim) return;
                f[j] = rest;
                emit(den + std::abs(rest));
                return;
            }
            for (int x = -std::min(room, ctx.k); x <= std::min(room, ctx.k); ++x) {
                if (std::abs(b[nbr[j]] + x) > lim) continue;
                f[j] = x;
                self(self, j + 1, den + std::abs(x), rest - x);
            }
        };
        rec(rec, 0, 0, need);
    }
    prune(ctx, t);
    return t;
}

DPTable dp_join(const DPContext& ctx, const DPTable& left, const DPTable& right) {
    if (left.bag != right.bag) throw InvalidDecomposition("join children have different bags");
    DPTable t;
    t.bag = left.bag;
    t.subtree = left.subtree;
    for (std::size_t v = 0; v < t.subtree.size(); ++v) t.subtree[v] |= right.subtree[v];
    const int lim = bound(ctx);
    const std::size_t width = t.bag.size();
    // Right entries grouped by membership pattern.
    std::map<std::string, std::vector<const std::pair<const std::string, Bits>*>> by_a;
    for (const auto& e : right.entries) by_a[e.first.substr(1, width)].push_back(&e);
    int q1, q2;
    std::vector<int> a1, b1, a2, b2, nb(width);
    Bits acc(words_for(ctx.budget));
    for (const auto& [lkey, lbits] : left.entries) {
        auto group = by_a.find(lkey.substr(1, width));
        if (group == by_a.end()) continue;
        DPTable::decode(lkey, q1, a1, b1);
        int members = 0;
        for (int x : a1) members += x;
        for (const auto* re : group->second) {
            DPTable::decode(re->first, q2, a2, b2);
            const int q = q1 + q2 - members;
            if (q > ctx.k) continue;
            bool ok = true;
            for (std::size_t i = 0; i < width && ok; ++i) {
                nb[i] = b1[i] + b2[i] - a1[i] + ctx.in_start[t.bag[i]];
                ok = std::abs(nb[i]) <= lim;
            }
            if (!ok) continue;
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t w = 0; w < lbits.size(); ++w)
                for (std::uint64_t word = lbits[w]; word; word &= word - 1)
                    or_shifted(acc, re->second, static_cast<int>(w * 64) + std::countr_zero(word),
                               ctx.budget);
            if (!any(acc)) continue;
            merge(t, DPTable::key(q, a1, nb), acc, ctx.budget);
        }
    }
    prune(ctx, t);
    return t;
}

namespace {

template <class Keep>
DPTable run(const DPContext& ctx, const NiceTreeDecomposition& ntd, Keep keep) {
    std::vector<std::optional<DPTable>> tables(ntd.nodes.size());
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
        const auto& node = ntd.nodes[i];
        DPTable t;
        switch (node.kind) {
            case NiceKind::Leaf: t = dp_leaf(ctx); break;
            case NiceKind::Introduce: t = dp_introduce(ctx, *tables[node.children[0]], node.vertex); break;
            case NiceKind::Forget: t = dp_forget(ctx, *tables[node.children[0]], node.vertex); break;
            case NiceKind::Join:
                t = dp_join(ctx, *tables[node.children[0]], *tables[node.children[1]]);
                break;
        }
        for (int c : node.children) {
            keep(static_cast<int>(c), std::move(*tables[c]));
            tables[c].reset();
        }
        tables[i] = std::move(t);
    }
    return std::move(*tables.back());
}

}  // namespace

std::vector<DPTable> dp_all_tables(const DPContext& ctx, const NiceTreeDecomposition& ntd) {
    validate(*ctx.graph, ntd);
    std::vector<DPTable> all(ntd.nodes.size());
    all.back() = run(ctx, ntd, [&](int i, DPTable&& t) { all[i] = std::move(t); });
    return all;
}

SolveResult solve_discovery_tw(const SubsetInstance& inst, const std::optional<NiceTreeDecomposition>& ntd) {
    const DPContext ctx = DPContext::from(inst);
    const NiceTreeDecomposition td =
        ntd ? *ntd : tree_decomposition(inst.graph, DecompositionMode::Heuristic);
    validate(inst.graph, td);
    std::uint64_t explored = 0;
    DPTable root = run(ctx, td, [&](int, DPTable&& t) { explored += t.num_states(); });
    explored += root.num_states();
    SolveResult r;
    r.solver = "tw-dp";
    r.explored = explored;
    if (auto best = root.min_budget(ctx.k, {}, {})) {
        r.yes = true;
        r.min_moves = *best;
    }
    return r;
}

}  // namespace solrec

#include "solrec/subset_solvers.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

#include "solrec/errors.hpp"
#include "solrec/matching.hpp"

namespace solrec {

namespace {

void normalize(CandidateFamily& f) {
    for (auto& m : f.members) std::sort(m.begin(), m.end());
    std::sort(f.members.begin(), f.members.end());
    f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
}

void branch_covers(const Graph& g, int k, std::vector<char>& in, std::vector<Vertex>& cur,
                   std::size_t edge_from, std::vector<std::vector<Vertex>>& out) {
    const auto& edges = g.edges();
    std::size_t e = edge_from;
    while (e < edges.size() && (in[edges[e].first] || in[edges[e].second])) ++e;
    if (e == edges.size()) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == k) return;
    for (Vertex pick : {edges[e].first, edges[e].second}) {
        in[pick] = 1;
        cur.push_back(pick);
        branch_covers(g, k, in, cur, e + 1, out);
        cur.pop_back();
        in[pick] = 0;
    }
}

bool is_minimal_cover(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    for (Vertex v : set) {
        bool needed = false;
        for (Vertex w : g.neighbors(v))
            if (!in[w]) {
                needed = true;
                break;
            }
        if (!needed) return false;
    }
    return true;
}

// Rows are tokens, columns candidate target vertices. Mandatory columns get a
// bonus larger than any achievable total so that every one of them is used.
struct Completion {
    std::int64_t cost = 0;
    std::vector<Vertex> column_vertex;  // per token
};

std::optional<Completion> cheapest_completion(const std::vector<std::vector<int>>& dist,
                                              const std::vector<std::vector<std::int64_t>>& mandatory_cost,
                                              const std::vector<Vertex>& mandatory_vertex,
                                              const std::vector<Vertex>& pool, std::int64_t unreachable,
                                              int cap) {
    const int k = static_cast<int>(dist.size());
    const int need = k - static_cast<int>(mandatory_cost.size());
    if (need < 0 || static_cast<int>(pool.size()) < need) return std::nullopt;
    auto cost_of = [&](int i, Vertex v) -> std::int64_t {
        return dist[i][v] == kUnreachable ? unreachable : dist[i][v];
    };
    // Each token only ever needs its k nearest pool vertices: at most k-1 of
    // them can be taken by other tokens.
    std::set<Vertex> columns;
    if (need > 0) {
        std::vector<Vertex> order(pool);
        for (int i = 0; i < k; ++i) {
            const int take = std::min<int>(k, static_cast<int>(order.size()));
            std::partial_sort(order.begin(), order.begin() + take, order.end(), [&](Vertex a, Vertex b) {
                return std::pair(cost_of(i, a), a) < std::pair(cost_of(i, b), b);
            });
            columns.insert(order.begin(), order.begin() + take);
        }
    }
    const std::int64_t bonus = (k + 1) * unreachable + 1;
    const int md = static_cast<int>(mandatory_cost.size());
    CostMatrix cost(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < md; ++j) cost[i].push_back(mandatory_cost[j][i] - bonus);
        for (Vertex v : columns) cost[i].push_back(cost_of(i, v));
    }
    std::vector<Vertex> col_vertex(mandatory_vertex);
    col_vertex.insert(col_vertex.end(), columns.begin(), columns.end());
    Completion c;
    if (k > 0) {
        auto a = min_weight_assignment(cost);
        c.cost = a.weight + bonus * md;
        for (int i = 0; i < k; ++i) c.column_vertex.push_back(col_vertex[a.col_of_row[i]]);
    }
    if (c.cost > cap) return std::nullopt;
    return c;
}

std::vector<std::vector<int>> token_distances(const SubsetInstance& inst) {
    std::vector<std::vector<int>> dist;
    for (Vertex s : inst.start.vertices()) dist.push_back(bfs_distances(inst.graph, s));
    return dist;
}

SolveResult finish(const SubsetInstance& inst, const std::optional<TokenConfig>& target,
                   const char* solver, std::uint64_t explored) {
    SolveResult r;
    r.solver = solver;
    r.explored = explored;
    if (!target) return r;
    auto plan = sliding_plan(inst.graph, inst.start, *target, inst.budget);
    if (!plan) return r;
    r.yes = true;
    r.min_moves = plan->cost;
    r.certificate = extract_slide_schedule(inst.graph, inst.start, *target, plan->assignment);
    return r;
}

void require(const SubsetInstance& inst, Problem p, const char* solver) {
    if (inst.problem != p || inst.model != Model::Slide)
        throw SolverInapplicable(std::string(solver) + " needs a " + to_string(p) +
                                 " instance under the slide model");
}

// Shared driver: for every candidate set D (mandatory) pick the cheapest
// k-superset from `pool(D)`.
template <class Pool>
SolveResult solve_by_candidates(const SubsetInstance& inst, const std::vector<std::vector<Vertex>>& family,
                                Pool pool_for, const char* solver) {
    const Graph& g = inst.graph;
    const auto dist = token_distances(inst);
    const std::int64_t unreachable = unreachable_cost(g, inst.budget);
    std::optional<std::int64_t> best;
    std::optional<TokenConfig> best_target;
    for (const auto& d : family) {
        std::vector<Vertex> mandatory;
        std::vector<Vertex> pool;
        pool_for(d, mandatory, pool);
        std::vector<std::vector<std::int64_t>> mcost;
        for (Vertex v : mandatory) {
            std::vector<std::int64_t> col;
            for (const auto& row : dist) col.push_back(row[v] == kUnreachable ? unreachable : row[v]);
            mcost.push_back(std::move(col));
        }
        auto c = cheapest_completion(dist, mcost, mandatory, pool, unreachable, inst.budget);
        if (!c || (best && c->cost >= *best)) continue;
        best = c->cost;
        best_target = TokenConfig(c->column_vertex);
    }
    return finish(inst, best_target, solver, family.size());
}

}  // namespace

CandidateFamily enumerate_minimal_vertex_covers(const Graph& g, int k) {
    CandidateFamily f;
    f.kind = FamilyKind::MinimalVertexCovers;
    f.provenance.kind = Provenance::Kind::Branching;
    if (k < 0) return f;
    std::vector<char> in(g.num_vertices(), 0);
    std::vector<Vertex> cur;
    branch_covers(g, k, in, cur, 0, f.members);
    normalize(f);
    std::erase_if(f.members, [&](const auto& m) { return !is_minimal_cover(g, m); });
    return f;
}

int sampler_trials(int k, int degeneracy, double delta) {
    if (!(delta > 0 && delta < 1)) throw InvalidArgument("failure probability must lie in (0,1)");
    const double p = 1.0 / (degeneracy + 1);
    const double log_hit = k * std::log(p) + static_cast<double>(k) * degeneracy * std::log1p(-p);
    const double trials = std::ceil(std::log(1.0 / delta) / std::exp(log_hit));
    if (!(trials < 2e9)) return INT_MAX;
    return std::max(1, static_cast<int>(trials));
}

CandidateFamily build_covering_family(const Graph& g, int k, const CoverOptions& opts) {
    const int n = g.num_vertices();
    CandidateFamily f;
    f.kind = FamilyKind::CoveringFamily;
    if (opts.provider == CoverProvider::Exhaustive) {
        if (n > opts.exhaustive_limit || n > 64)
            throw ExhaustiveLimitExceeded("exhaustive covering family limited to " +
                                          std::to_string(std::min(opts.exhaustive_limit, 64)) +
                                          " vertices, graph has " + std::to_string(n));
        f.provenance.kind = Provenance::Kind::Exhaustive;
        const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
        std::vector<std::uint64_t> free_of(n);  // non-neighbours other than itself
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t adj = 0;
            for (Vertex w : g.neighbors(v)) adj |= 1ull << w;
            free_of[v] = all & ~adj & ~(1ull << v);
        }
        // Bron-Kerbosch with pivoting on the complement graph.
        auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
            if (!p && !x) {
                std::vector<Vertex> m;
                for (std::uint64_t b = r; b; b &= b - 1) m.push_back(std::countr_zero(b));
                f.members.push_back(std::move(m));
                return;
            }
            int pivot = std::countr_zero(p | x);
            int most = -1;
            for (std::uint64_t b = p | x; b; b &= b - 1) {
                int u = std::countr_zero(b);
                int c = std::popcount(p & free_of[u]);
                if (c > most) {
                    most = c;
                    pivot = u;
                }
            }
            for (std::uint64_t b = p & ~free_of[pivot]; b; b &= b - 1) {
                int v = std::countr_zero(b);
                std::uint64_t bit = 1ull << v;
                self(self, r | bit, p & free_of[v], x & free_of[v]);
                p &= ~bit;
                x |= bit;
            }
        };
        if (n > 0) bk(bk, 0, all, 0);
        else f.members.emplace_back();
        normalize(f);
        return f;
    }
    const auto order = degeneracy_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order.order[i]] = i;
    const int trials = opts.trials.value_or(sampler_trials(k, order.degeneracy, opts.failure_probability));
    if (trials > opts.trial_limit)
        throw ExhaustiveLimitExceeded("sampler needs " + std::to_string(trials) + " trials, limit " +
                                      std::to_string(opts.trial_limit));
    std::set<std::vector<Vertex>> seen;
    f.provenance = {Provenance::Kind::MonteCarlo, trials, opts.failure_probability};
    const double p = 1.0 / (order.degeneracy + 1);
    std::mt19937_64 rng(opts.seed);
    std::bernoulli_distribution coin(p);
    std::vector<char> sampled(n), in(n), blocked(n);
    for (int t = 0; t < trials; ++t) {
        for (Vertex v = 0; v < n; ++v) sampled[v] = coin(rng);
        std::fill(in.begin(), in.end(), 0);
        for (Vertex v = 0; v < n; ++v) {
            if (!sampled[v]) continue;
            bool keep = true;
            for (Vertex w : g.neighbors(v))
                if (pos[w] > pos[v] && sampled[w]) {
                    keep = false;
                    break;
                }
            in[v] = keep;
        }
        std::fill(blocked.begin(), blocked.end(), 0);
        for (Vertex v = 0; v < n; ++v)
            if (in[v])
                for (Vertex w : g.neighbors(v)) blocked[w] = 1;
        std::vector<Vertex> member;
        for (Vertex v = 0; v < n; ++v) {
            if (!in[v] && !blocked[v]) {
                in[v] = 1;
                for (Vertex w : g.neighbors(v)) blocked[w] = 1;
            }
            if (in[v]) member.push_back(v);
        }
        seen.insert(std::move(member));
    }
    f.members.assign(seen.begin(), seen.end());
    normalize(f);
    return f;
}

ProjectionClasses projection_classes(const Graph& g, const std::vector<Vertex>& core) {
    const int n = g.num_vertices();
    std::vector<char> in_core(n, 0);
    for (Vertex c : core) {
        if (!g.contains(c)) throw InvalidArgument("core vertex " + std::to_string(c) + " out of range");
        in_core[c] = 1;
    }
    ProjectionClasses pc;
    for (Vertex v = 0; v < n; ++v)
        if (in_core[v]) pc.core.push_back(v);
    std::map<std::vector<Vertex>, int> by_trace;
    for (Vertex v = 0; v < n; ++v) {
        if (in_core[v]) continue;
        std::vector<Vertex> trace;
        for (Vertex w : g.neighbors(v))
            if (in_core[w]) trace.push_back(w);
        auto [it, fresh] = by_trace.emplace(std::move(trace), static_cast<int>(pc.classes.size()));
        if (fresh) pc.classes.emplace_back();
        pc.classes[it->second].push_back(v);
    }
    return pc;
}

CandidateFamily enumerate_minimal_dominating_sets(const Graph& g, int k) {
    const int n = g.num_vertices();
    CandidateFamily f;
    f.kind = FamilyKind::MinimalDominatingSets;
    f.provenance.kind = Provenance::Kind::Branching;
    if (k < 0) return f;
    std::vector<int> covered(n, 0);
    std::vector<char> in(n, 0);
    std::vector<Vertex> cur;
    auto toggle = [&](Vertex v, int delta) {
        covered[v] += delta;
        for (Vertex w : g.neighbors(v)) covered[w] += delta;
    };
    auto rec = [&](auto&& self, Vertex from) -> void {
        Vertex u = from;
        while (u < n && covered[u] > 0) ++u;
        if (u == n) {
            f.members.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == k) return;
        std::vector<Vertex> choices{u};
        choices.insert(choices.end(), g.neighbors(u).begin(), g.neighbors(u).end());
        std::sort(choices.begin(), choices.end());
        for (Vertex w : choices) {
            if (in[w]) continue;
            in[w] = 1;
            cur.push_back(w);
            toggle(w, 1);
            self(self, u);
            toggle(w, -1);
            cur.pop_back();
            in[w] = 0;
        }
    };
    rec(rec, 0);
    normalize(f);
    std::erase_if(f.members, [&](const std::vector<Vertex>& m) {
        std::vector<int> cnt(n, 0);
        for (Vertex v : m) {
            ++cnt[v];
            for (Vertex w : g.neighbors(v)) ++cnt[w];
        }
        for (Vertex v : m) {
            bool private_vertex = cnt[v] == 1;
            for (Vertex w : g.neighbors(v)) private_vertex = private_vertex || cnt[w] == 1;
            if (!private_vertex) return true;
        }
        return false;
    });
    return f;
}

SolveResult solve_vcd_fpt(const SubsetInstance& inst) {
    require(inst, Problem::VertexCover, "vcd-fpt");
    const int n = inst.graph.num_vertices();
    auto family = enumerate_minimal_vertex_covers(inst.graph, inst.k());
    return solve_by_candidates(
        inst, family.members,
        [&](const std::vector<Vertex>& d, std::vector<Vertex>& mandatory, std::vector<Vertex>& pool) {
            mandatory = d;
            std::vector<char> in(n, 0);
            for (Vertex v : d) in[v] = 1;
            for (Vertex v = 0; v < n; ++v)
                if (!in[v]) pool.push_back(v);
        },
        "vcd-fpt");
}

SolveResult solve_isd_covering(const SubsetInstance& inst, const CoverOptions& opts) {
    require(inst, Problem::IndependentSet, "isd-cover");
    auto family = build_covering_family(inst.graph, inst.k(), opts);
    std::erase_if(family.members, [&](const auto& j) { return static_cast<int>(j.size()) < inst.k(); });
    return solve_by_candidates(
        inst, family.members,
        [&](const std::vector<Vertex>& j, std::vector<Vertex>&, std::vector<Vertex>& pool) { pool = j; },
        "isd-cover");
}

SolveResult solve_dsd_core(const SubsetInstance& inst, const std::optional<std::vector<Vertex>>& core) {
    require(inst, Problem::DominatingSet, "dsd-core");
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    const int k = inst.k();
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    const auto pc = projection_classes(g, core.value_or(all));
    if (pc.classes.empty()) {
        auto family = enumerate_minimal_dominating_sets(g, k);
        return solve_by_candidates(
            inst, family.members,
            [&](const std::vector<Vertex>& d, std::vector<Vertex>& mandatory, std::vector<Vertex>& pool) {
                mandatory = d;
                std::vector<char> in(n, 0);
                for (Vertex v : d) in[v] = 1;
                for (Vertex v = 0; v < n; ++v)
                    if (!in[v]) pool.push_back(v);
            },
            "dsd-core");
    }

    // Non-trivial core: each class acts as a single vertex whose slot may be
    // filled by any member. Super-vertices: core vertices 0..|C|-1, then classes.
    const int c = static_cast<int>(pc.core.size());
    const int supers = c + static_cast<int>(pc.classes.size());
    std::vector<int> core_index(n, -1), class_of(n, -1);
    for (int i = 0; i < c; ++i) core_index[pc.core[i]] = i;
    for (int i = 0; i < static_cast<int>(pc.classes.size()); ++i)
        for (Vertex v : pc.classes[i]) class_of[v] = i;
    std::vector<std::vector<int>> dominates(supers);  // core indices dominated
    for (int i = 0; i < c; ++i) {
        dominates[i].push_back(i);
        for (Vertex w : g.neighbors(pc.core[i]))
            if (core_index[w] >= 0) dominates[i].push_back(core_index[w]);
    }
    for (int i = 0; i < static_cast<int>(pc.classes.size()); ++i)
        for (Vertex w : g.neighbors(pc.classes[i].front()))
            if (core_index[w] >= 0) dominates[c + i].push_back(core_index[w]);
    std::vector<std::vector<int>> dominated_by(c);
    for (int s = 0; s < supers; ++s)
        for (int ci : dominates[s]) dominated_by[ci].push_back(s);

    std::vector<std::vector<int>> family;
    std::vector<int> covered(c, 0), cur;
    std::vector<char> chosen(supers, 0);
    auto rec = [&](auto&& self, int from) -> void {
        int u = from;
        while (u < c && covered[u] > 0) ++u;
        if (u == c) {
            family.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == k) return;
        for (int s : dominated_by[u]) {
            if (chosen[s]) continue;
            chosen[s] = 1;
            cur.push_back(s);
            for (int ci : dominates[s]) ++covered[ci];
            self(self, u);
            for (int ci : dominates[s]) --covered[ci];
            cur.pop_back();
            chosen[s] = 0;
        }
    };
    rec(rec, 0);
    for (auto& m : family) std::sort(m.begin(), m.end());
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    const auto dist = token_distances(inst);
    const std::int64_t unreachable = unreachable_cost(g, inst.budget);
    std::optional<std::int64_t> best;
    std::optional<TokenConfig> best_target;
    for (const auto& d : family) {
        std::vector<std::vector<std::int64_t>> mcost;
        std::vector<Vertex> mvertex;
        std::vector<char> used(n, 0);
        for (int s : d) {
            std::vector<std::int64_t> col;
            if (s < c) {
                used[pc.core[s]] = 1;
                for (const auto& row : dist) {
                    int x = row[pc.core[s]];
                    col.push_back(x == kUnreachable ? unreachable : x);
                }
                mvertex.push_back(pc.core[s]);
            } else {
                for (const auto& row : dist) {
                    int x = kUnreachable;
                    for (Vertex m : pc.classes[s - c]) x = std::min(x, row[m]);
                    col.push_back(x == kUnreachable ? unreachable : x);
                }
                mvertex.push_back(-1 - (s - c));
            }
            mcost.push_back(std::move(col));
        }
        std::vector<Vertex> pool;
        for (Vertex v = 0; v < n; ++v)
            if (!used[v]) pool.push_back(v);
        auto comp = cheapest_completion(dist, mcost, mvertex, pool, unreachable, inst.budget);
        if (!comp) continue;
        // Realize class slots by the nearest member still free, then resolve
        // any collisions with the nearest free vertex.
        std::vector<char> taken(used);
        std::vector<Vertex> target(k, -1);
        for (int i = 0; i < k; ++i) {
            Vertex col = comp->column_vertex[i];
            if (col >= 0 && used[col]) target[i] = col;
        }
        auto nearest_free = [&](int i, const std::vector<Vertex>& options) {
            Vertex pick = -1;
            for (Vertex v : options)
                if (!taken[v] && (pick < 0 || std::pair(dist[i][v], v) < std::pair(dist[i][pick], pick)))
                    pick = v;
            return pick;
        };
        for (int i = 0; i < k; ++i) {
            Vertex col = comp->column_vertex[i];
            if (col < 0) {
                target[i] = nearest_free(i, pc.classes[-1 - col]);
                if (target[i] >= 0) taken[target[i]] = 1;
            }
        }
        for (int i = 0; i < k; ++i) {
            Vertex col = comp->column_vertex[i];
            if (col >= 0 && !used[col]) {
                target[i] = taken[col] ? nearest_free(i, all) : col;
                taken[target[i]] = 1;
            }
        }
        if (std::find(target.begin(), target.end(), -1) != target.end()) continue;
        TokenConfig t(target);
        auto cost = sliding_cost(g, inst.start, t, inst.budget);
        if (!cost || (best && *cost >= *best)) continue;
        best = *cost;
        best_target = std::move(t);
    }
    return finish(inst, best_target, "dsd-core", family.size());
}

}  // namespace solrec

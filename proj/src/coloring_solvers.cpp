#include "solrec/coloring_solvers.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

namespace {

void require(const ColoringInstance& inst, Model model, const char* solver) {
    if (inst.model != model || inst.colors != 2)
        throw SolverInapplicable(std::string(solver) + " needs a 2-coloring instance under the " +
                                 to_string(model) + " model");
}

// Color vertex v should get under orientation o (0: L red, 1: L green).
int wanted(int side, int o) { return (side == o) ? kRed : kGreen; }

}  // namespace

std::optional<std::vector<ComponentChoice>> component_choices(const Graph& g, const Coloring& c) {
    auto bp = bipartition(g);
    if (!std::holds_alternative<Bipartition>(bp)) return std::nullopt;
    const auto& b = std::get<Bipartition>(bp);
    std::vector<ComponentChoice> out;
    for (int i = 0; i < b.components.count(); ++i) {
        ComponentChoice ch;
        ch.component = i;
        ch.left = b.left(i);
        ch.right = b.right(i);
        int red = 0, red_left = 0, red_right = 0;
        for (Vertex v : ch.left) red_left += c[v] == kRed;
        for (Vertex v : ch.right) red_right += c[v] == kRed;
        red = red_left + red_right;
        ch.excess[0] = red - static_cast<int>(ch.left.size());
        ch.excess[1] = red - static_cast<int>(ch.right.size());
        ch.budget[0] = red_right;
        ch.budget[1] = red_left;
        out.push_back(std::move(ch));
    }
    return out;
}

FlowResult min_cost_max_flow(const FlowNetwork& net) {
    const int n = net.num_nodes;
    struct R {
        int to, cap, cost, rev;
        int arc;  // index in net.arcs, -1 for reverse arcs
    };
    std::vector<std::vector<R>> res(n);
    for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) {
        const auto& a = net.arcs[i];
        if (a.cost < 0) throw InvalidArgument("negative arc cost");
        res[a.from].push_back({a.to, a.capacity, a.cost, static_cast<int>(res[a.to].size()), i});
        res[a.to].push_back({a.from, 0, -a.cost, static_cast<int>(res[a.from].size()) - 1, -1});
    }
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> pot(n, 0), dist(n);
    std::vector<std::pair<int, int>> prev(n);
    FlowResult out;
    for (;;) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[net.source] = 0;
        using Item = std::pair<std::int64_t, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0, net.source);
        while (!heap.empty()) {
            auto [d, x] = heap.top();
            heap.pop();
            if (d != dist[x]) continue;
            for (int e = 0; e < static_cast<int>(res[x].size()); ++e) {
                const auto& r = res[x][e];
                if (r.cap <= 0) continue;
                std::int64_t nd = d + r.cost + pot[x] - pot[r.to];
                if (nd < dist[r.to]) {
                    dist[r.to] = nd;
                    prev[r.to] = {x, e};
                    heap.emplace(nd, r.to);
                }
            }
        }
        if (dist[net.sink] == inf) break;
        for (int x = 0; x < n; ++x)
            if (dist[x] < inf) pot[x] += dist[x];
        int push = std::numeric_limits<int>::max();
        for (int x = net.sink; x != net.source; x = prev[x].first)
            push = std::min(push, res[prev[x].first][prev[x].second].cap);
        for (int x = net.sink; x != net.source; x = prev[x].first) {
            auto& r = res[prev[x].first][prev[x].second];
            r.cap -= push;
            res[x][r.rev].cap += push;
            out.cost += static_cast<std::int64_t>(push) * r.cost;
        }
        out.value += push;
    }
    out.flow.assign(net.arcs.size(), 0);
    for (int x = 0; x < n; ++x)
        for (const auto& r : res[x])
            if (r.arc >= 0) out.flow[r.arc] = net.arcs[r.arc].capacity - r.cap;
    return out;
}

SolveResult solve_cd_flip_k2(const ColoringInstance& inst) {
    require(inst, Model::Flip, "cd-k2-flip");
    SolveResult r;
    r.solver = "cd-k2-flip";
    auto choices = component_choices(inst.graph, inst.coloring);
    if (!choices) return r;
    MoveSequence seq;
    for (const auto& ch : *choices) {
        r.explored += 2;
        int best = -1;
        std::vector<Move> best_moves;
        for (int o = 0; o < 2; ++o) {
            std::vector<Move> moves;
            for (int side = 0; side < 2; ++side)
                for (Vertex v : side == 0 ? ch.left : ch.right)
                    if (inst.coloring[v] != wanted(side, o)) moves.push_back(Move::flip(v, wanted(side, o)));
            std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.u < b.u; });
            if (best < 0 || static_cast<int>(moves.size()) < best) {
                best = static_cast<int>(moves.size());
                best_moves = std::move(moves);
            }
        }
        seq.insert(seq.end(), best_moves.begin(), best_moves.end());
    }
    if (static_cast<int>(seq.size()) <= inst.budget) {
        r.yes = true;
        r.min_moves = static_cast<int>(seq.size());
        r.certificate = std::move(seq);
    }
    return r;
}

SolveResult solve_cd_swap_k2(const ColoringInstance& inst) {
    require(inst, Model::Swap, "cd-k2-swap");
    SolveResult r;
    r.solver = "cd-k2-swap";
    auto choices = component_choices(inst.graph, inst.coloring);
    if (!choices) return r;
    const int n = inst.graph.num_vertices();
    const int q = static_cast<int>(choices->size());
    // reach[x] over (y, z): y the excess sum offset by n, z the budget sum;
    // the value records the orientation taken for component x-1 (1 or 2).
    const int ys = 2 * n + 1, zs = n + 1;
    std::vector<std::vector<signed char>> reach(q + 1, std::vector<signed char>(ys * zs, 0));
    reach[0][n * zs + 0] = 3;
    for (int x = 0; x < q; ++x) {
        const auto& ch = (*choices)[x];
        for (int y = 0; y < ys; ++y)
            for (int z = 0; z < zs; ++z) {
                if (!reach[x][y * zs + z]) continue;
                ++r.explored;
                for (int o = 0; o < 2; ++o) {
                    int ny = y + ch.excess[o], nz = z + ch.budget[o];
                    if (ny < 0 || ny >= ys || nz >= zs) continue;
                    auto& cell = reach[x + 1][ny * zs + nz];
                    if (!cell) cell = static_cast<signed char>(o + 1);
                }
            }
    }
    int best = -1;
    for (int z = 0; z < zs && best < 0; ++z)
        if (reach[q][n * zs + z]) best = z;
    if (best < 0 || best > inst.budget) return r;
    std::vector<int> orient(q);
    for (int x = q, y = n, z = best; x > 0; --x) {
        int o = reach[x][y * zs + z] - 1;
        orient[x - 1] = o;
        y -= (*choices)[x - 1].excess[o];
        z -= (*choices)[x - 1].budget[o];
    }
    std::vector<Vertex> wrong_red, wrong_green;
    for (int x = 0; x < q; ++x) {
        const auto& ch = (*choices)[x];
        for (int side = 0; side < 2; ++side)
            for (Vertex v : side == 0 ? ch.left : ch.right) {
                int want = wanted(side, orient[x]);
                if (inst.coloring[v] == want) continue;
                (want == kGreen ? wrong_red : wrong_green).push_back(v);
            }
    }
    std::sort(wrong_red.begin(), wrong_red.end());
    std::sort(wrong_green.begin(), wrong_green.end());
    MoveSequence seq;
    for (std::size_t i = 0; i < wrong_red.size(); ++i) seq.push_back(Move::swap(wrong_red[i], wrong_green[i]));
    r.yes = true;
    r.min_moves = best;
    r.certificate = std::move(seq);
    return r;
}

namespace {

struct SlidePlan {
    std::int64_t cost = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;  // wrong L vertex, wrong R vertex
};

std::optional<SlidePlan> plan_component(const Graph& g, const ComponentChoice& ch, const Coloring& c,
                                        int o) {
    std::vector<Vertex> sources, sinks;
    for (Vertex v : ch.left)
        if (c[v] != wanted(0, o)) sources.push_back(v);
    for (Vertex v : ch.right)
        if (c[v] != wanted(1, o)) sinks.push_back(v);
    if (sources.size() != sinks.size()) return std::nullopt;
    SlidePlan plan;
    if (sources.empty()) return plan;
    const int q = static_cast<int>(sources.size());
    std::vector<Vertex> members(ch.left);
    members.insert(members.end(), ch.right.begin(), ch.right.end());
    std::sort(members.begin(), members.end());
    auto local = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
    };
    FlowNetwork net;
    net.num_nodes = static_cast<int>(members.size());
    net.source = net.add_node();
    net.sink = net.add_node();
    for (Vertex v : sources) net.add_arc(net.source, local(v), 1, 0);
    for (Vertex v : sinks) net.add_arc(local(v), net.sink, 1, 0);
    for (Vertex v : members)
        for (Vertex w : g.neighbors(v)) net.add_arc(local(v), local(w), q, 1);
    auto flow = min_cost_max_flow(net);
    if (flow.value != q) return std::nullopt;
    plan.cost = flow.cost;
    // Peel s-t paths off the positive-flow arcs.
    std::vector<std::vector<int>> out(net.num_nodes);
    for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) out[net.arcs[a].from].push_back(a);
    std::vector<int> left(flow.flow);
    for (int p = 0; p < q; ++p) {
        std::vector<int> via(net.num_nodes, -1);
        std::deque<int> queue{net.source};
        std::vector<char> seen(net.num_nodes, 0);
        seen[net.source] = 1;
        while (!queue.empty() && !seen[net.sink]) {
            int x = queue.front();
            queue.pop_front();
            for (int a : out[x]) {
                int y = net.arcs[a].to;
                if (left[a] <= 0 || seen[y]) continue;
                seen[y] = 1;
                via[y] = a;
                queue.push_back(y);
            }
        }
        std::vector<int> nodes;
        for (int x = net.sink; x != net.source; x = net.arcs[via[x]].from) {
            --left[via[x]];
            if (x != net.sink) nodes.push_back(x);
        }
        plan.pairs.emplace_back(members[nodes.back()], members[nodes.front()]);
    }
    return plan;
}

// Fixes each (wrong L, wrong R) pair along a shortest path whose interior is
// correct. A wrong interior vertex belongs to another pair; exchanging
// partners never increases the total and shortens the current path.
void realize(const Graph& g, const std::vector<int>& side, int o, std::vector<std::pair<Vertex, Vertex>> pairs,
             Coloring& cur, MoveSequence& seq) {
    auto wrong = [&](Vertex v) { return cur[v] != wanted(side[v], o); };
    while (!pairs.empty()) {
        auto [u, w] = pairs.front();
        for (;;) {
            auto path = shortest_path(g, u, w);
            std::size_t bad = 0;
            for (std::size_t i = 1; i + 1 < path.size() && !bad; ++i)
                if (wrong(path[i])) bad = i;
            if (!bad) {
                const std::size_t len = path.size();
                MoveSequence part;
                for (std::size_t i = 1; i + 2 < len; i += 2) part.push_back(Move::cslide(path[i], path[i + 1]));
                for (std::size_t i = 0; i + 1 < len; i += 2) part.push_back(Move::cslide(path[i], path[i + 1]));
                for (const auto& m : part) std::swap(cur[m.u], cur[m.v]);
                seq.insert(seq.end(), part.begin(), part.end());
                pairs.erase(pairs.begin());
                break;
            }
            const Vertex z = path[bad];
            bool swapped = false;
            for (std::size_t j = 1; j < pairs.size() && !swapped; ++j) {
                if (side[z] == 1 && pairs[j].second == z) {
                    pairs[j].second = w;
                    w = z;
                    swapped = true;
                } else if (side[z] == 0 && pairs[j].first == z) {
                    pairs[j].first = u;
                    u = z;
                    swapped = true;
                }
            }
            if (!swapped) throw std::logic_error("wrong vertex outside the pairing");
            pairs.front() = {u, w};
        }
    }
}

}  // namespace

SolveResult solve_cd_slide_k2(const ColoringInstance& inst) {
    require(inst, Model::ColorSlide, "cd-k2-slide");
    SolveResult r;
    r.solver = "cd-k2-slide";
    auto choices = component_choices(inst.graph, inst.coloring);
    if (!choices) return r;
    std::vector<int> side(inst.graph.num_vertices(), 0);
    for (const auto& ch : *choices)
        for (Vertex v : ch.right) side[v] = 1;
    std::int64_t total = 0;
    std::vector<std::pair<int, SlidePlan>> chosen;
    for (const auto& ch : *choices) {
        std::optional<SlidePlan> best;
        int best_o = 0;
        for (int o = 0; o < 2; ++o) {
            ++r.explored;
            auto plan = plan_component(inst.graph, ch, inst.coloring, o);
            if (plan && (!best || plan->cost < best->cost)) {
                best = std::move(plan);
                best_o = o;
            }
        }
        if (!best) return r;
        total += best->cost;
        chosen.emplace_back(best_o, std::move(*best));
    }
    if (total > inst.budget) return r;
    Coloring cur = inst.coloring;
    MoveSequence seq;
    for (auto& [o, plan] : chosen) realize(inst.graph, side, o, plan.pairs, cur, seq);
    r.yes = true;
    r.min_moves = static_cast<int>(total);
    r.certificate = std::move(seq);
    return r;
}

SolveResult solve_cd_bounded(const ColoringInstance& inst, const OracleOptions& opts) {
    const std::int64_t n = inst.graph.num_vertices();
    OracleOptions o = opts;
    o.budget = static_cast<int>(std::min<std::int64_t>(opts.budget.value_or(inst.budget), 2 * n * n));
    auto r = oracle_solve(inst, o);
    r.solver = "cd-bounded";
    return r;
}

}  // namespace solrec

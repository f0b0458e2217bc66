#include "solrec/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::size_t column_count(const CostMatrix& cost) {
    std::size_t m = cost.empty() ? 0 : cost.front().size();
    for (const auto& row : cost)
        if (row.size() != m) throw InvalidArgument("cost matrix rows differ in length");
    return m;
}

}  // namespace

Assignment min_weight_assignment(const CostMatrix& cost) {
    const int n = static_cast<int>(cost.size());
    const int m = static_cast<int>(column_count(cost));
    if (n > m) throw InvalidArgument("more rows than columns");
    // 1-indexed internally; column 0 is the virtual root of each search.
    std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            std::int64_t delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    Assignment a;
    a.col_of_row.assign(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] > 0) a.col_of_row[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) a.weight += cost[i][a.col_of_row[i]];
    a.row_potential.assign(u.begin() + 1, u.end());
    a.col_potential.assign(v.begin() + 1, v.end());
    return a;
}

Assignment min_weight_perfect_matching(const CostMatrix& cost) {
    if (column_count(cost) != cost.size()) throw InvalidArgument("cost matrix is not square");
    return min_weight_assignment(cost);
}

Assignment lexicographic_min_assignment(const CostMatrix& cost) {
    Assignment best = min_weight_assignment(cost);
    const int n = static_cast<int>(cost.size());
    const int m = static_cast<int>(column_count(cost));
    std::vector<char> taken(m, 0);
    std::vector<int> chosen;
    std::int64_t fixed = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            if (taken[j]) continue;
            CostMatrix rest;
            for (int r = i + 1; r < n; ++r) {
                std::vector<std::int64_t> row;
                for (int c = 0; c < m; ++c)
                    if (!taken[c] && c != j) row.push_back(cost[r][c]);
                rest.push_back(std::move(row));
            }
            std::int64_t total = fixed + cost[i][j] + (rest.empty() ? 0 : min_weight_assignment(rest).weight);
            if (total == best.weight) {
                taken[j] = 1;
                chosen.push_back(j);
                fixed += cost[i][j];
                break;
            }
        }
    }
    best.col_of_row = chosen;
    return best;
}

bool certifies_optimality(const CostMatrix& cost, const Assignment& a) {
    const std::size_t n = cost.size();
    const std::size_t m = column_count(cost);
    if (a.col_of_row.size() != n || a.row_potential.size() != n || a.col_potential.size() != m)
        return false;
    std::vector<char> matched(m, 0);
    std::int64_t weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int j = a.col_of_row[i];
        if (j < 0 || static_cast<std::size_t>(j) >= m || matched[j]) return false;
        matched[j] = 1;
        weight += cost[i][j];
        if (a.row_potential[i] + a.col_potential[j] != cost[i][j]) return false;
        for (std::size_t c = 0; c < m; ++c)
            if (a.row_potential[i] + a.col_potential[c] > cost[i][c]) return false;
    }
    for (std::size_t c = 0; c < m; ++c)
        if (!matched[c] && a.col_potential[c] > 0) return false;
    return weight == a.weight;
}

CostMatrix pad_square(const CostMatrix& cost, std::int64_t fill) {
    CostMatrix out = cost;
    std::size_t m = column_count(cost);
    std::size_t size = std::max(m, cost.size());
    for (auto& row : out) row.resize(size, fill);
    while (out.size() < size) out.emplace_back(size, fill);
    return out;
}

std::optional<SlidingPlan> sliding_plan(const Graph& g, const TokenConfig& source,
                                        const TokenConfig& target, int cap) {
    if (source.size() != target.size())
        throw InvalidArgument("source and target hold different token counts");
    const std::int64_t unreachable = unreachable_cost(g, cap);
    CostMatrix cost;
    for (Vertex s : source.vertices()) {
        auto d = bfs_distances(g, s);
        std::vector<std::int64_t> row;
        for (Vertex t : target.vertices())
            row.push_back(d[t] == kUnreachable ? unreachable : d[t]);
        cost.push_back(std::move(row));
    }
    auto a = lexicographic_min_assignment(cost);
    if (a.weight > cap) return std::nullopt;
    return SlidingPlan{static_cast<int>(a.weight), a.col_of_row};
}

std::optional<int> sliding_cost(const Graph& g, const TokenConfig& source,
                                const TokenConfig& target, int cap) {
    auto plan = sliding_plan(g, source, target, cap);
    if (!plan) return std::nullopt;
    return plan->cost;
}

MoveSequence extract_slide_schedule(const Graph& g, const TokenConfig& source,
                                    const TokenConfig& target, const std::vector<int>& assignment) {
    const int n = g.num_vertices();
    const auto& src = source.vertices();
    const auto& dst = target.vertices();
    if (src.size() != dst.size() || assignment.size() != src.size())
        throw InvalidArgument("assignment does not match the token counts");
    std::vector<Vertex> goal(n, -1);  // goal[x]: target of the token on x
    std::vector<char> hit(dst.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        int j = assignment[i];
        if (j < 0 || j >= static_cast<int>(dst.size()) || hit[j])
            throw InvalidArgument("assignment is not a bijection");
        hit[j] = 1;
        goal[src[i]] = dst[j];
    }
    std::map<Vertex, std::vector<int>> dist_to;
    for (Vertex t : dst) dist_to[t] = bfs_distances(g, t);
    for (std::size_t i = 0; i < src.size(); ++i)
        if (dist_to[goal[src[i]]][src[i]] == kUnreachable)
            throw InvalidArgument("assignment sends a token to another component");

    MoveSequence seq;
    for (;;) {
        Vertex x = -1;
        int far = 0;
        for (Vertex y = 0; y < n; ++y) {
            if (goal[y] < 0 || goal[y] == y) continue;
            int d = dist_to[goal[y]][y];
            if (d > far) {
                far = d;
                x = y;
            }
        }
        if (x < 0) break;
        const Vertex t = goal[x];
        if (goal[t] >= 0) {
            // The token already sitting on t takes over x's destination.
            goal[x] = goal[t];
            goal[t] = t;
            continue;
        }
        const auto& dt = dist_to[t];
        std::vector<Vertex> path{x};
        while (path.back() != t) {
            for (Vertex w : g.neighbors(path.back()))
                if (dt[w] == dt[path.back()] - 1) {
                    path.push_back(w);
                    break;
                }
        }
        std::size_t last = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (goal[path[i]] >= 0) last = i;
        const Vertex z = path[last];
        for (std::size_t i = last; i + 1 < path.size(); ++i)
            seq.push_back(Move::slide(path[i], path[i + 1]));
        const Vertex z_goal = goal[z];
        goal[z] = -1;
        goal[t] = t;
        if (z != x) goal[x] = z_goal;
    }
    return seq;
}

MoveSequence swap_colors_via_sliding(const Graph& g, Vertex u, Vertex v,
                                     const std::vector<Vertex>& path) {
    if (path.size() < 2 || path.front() != u || path.back() != v)
        throw InvalidArgument("path must run from u to v with at least one edge");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw InvalidArgument("path step " + std::to_string(path[i]) + "-" +
                                  std::to_string(path[i + 1]) + " is not an edge");
    const std::size_t d = path.size() - 1;
    MoveSequence seq;
    for (std::size_t i = 0; i < d; ++i) seq.push_back(Move::cslide(path[i], path[i + 1]));
    for (std::size_t i = d - 1; i-- > 0;) seq.push_back(Move::cslide(path[i], path[i + 1]));
    return seq;
}

}  // namespace solrec

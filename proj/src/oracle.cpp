#include "solrec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

std::uint64_t default_guard_limit() {
    if (const char* env = std::getenv("SOLREC_GUARD_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultGuardLimit;
}

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

// Interned fixed-width states: a flat arena plus an open-addressing index.
class StateStore {
public:
    explicit StateStore(int words) : words_(words), table_(1 << 10, -1) {}

    int size() const { return count_; }
    const std::uint64_t* state(int id) const {
        return arena_.data() + static_cast<std::size_t>(id) * words_;
    }

    std::pair<int, bool> intern(const std::uint64_t* s) {
        if (static_cast<std::size_t>(count_ + 1) * 2 > table_.size()) grow();
        const std::size_t mask = table_.size() - 1;
        std::size_t h = hash(s) & mask;
        while (table_[h] >= 0) {
            if (std::equal(s, s + words_, state(table_[h]))) return {table_[h], false};
            h = (h + 1) & mask;
        }
        int id = count_++;
        arena_.insert(arena_.end(), s, s + words_);
        table_[h] = id;
        return {id, true};
    }

private:
    std::uint64_t hash(const std::uint64_t* s) const {
        std::uint64_t x = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < words_; ++i) {
            x ^= s[i] + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
            x ^= x >> 33;
            x *= 0xff51afd7ed558ccdull;
            x ^= x >> 33;
        }
        return x;
    }

    void grow() {
        std::vector<int> bigger(table_.size() * 2, -1);
        const std::size_t mask = bigger.size() - 1;
        for (int id = 0; id < count_; ++id) {
            std::size_t h = hash(state(id)) & mask;
            while (bigger[h] >= 0) h = (h + 1) & mask;
            bigger[h] = id;
        }
        table_ = std::move(bigger);
    }

    int words_;
    int count_ = 0;
    std::vector<std::uint64_t> arena_;
    std::vector<int> table_;
};

struct Search {
    StateStore store;
    std::vector<int> parent;
    std::vector<Move> move;
    std::vector<int> depth;

    explicit Search(int words) : store(words) {}

    MoveSequence path_to(int id) const {
        MoveSequence seq;
        for (; parent[id] >= 0; id = parent[id]) seq.push_back(move[id]);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }
};

// Returns the id of the first goal state found, or -1. `expand(state, emit)`
// calls emit(move, next) per successor and stops when emit returns true.
template <class Expand, class Goal>
int bfs(Search& s, const std::vector<std::uint64_t>& init, int budget, std::uint64_t guard,
        double estimate, Expand expand, Goal goal) {
    s.store.intern(init.data());
    s.parent.push_back(-1);
    s.move.emplace_back();
    s.depth.push_back(0);
    if (goal(init.data())) return 0;
    const std::size_t words = init.size();
    std::vector<std::uint64_t> cur(words);
    int found = -1;
    for (int head = 0; head < s.store.size(); ++head) {
        const int d = s.depth[head];
        if (d >= budget) break;
        std::copy_n(s.store.state(head), words, cur.begin());
        expand(cur.data(), [&](const Move& m, const std::uint64_t* next) {
            auto [id, fresh] = s.store.intern(next);
            if (!fresh) return false;
            s.parent.push_back(head);
            s.move.push_back(m);
            s.depth.push_back(d + 1);
            if (static_cast<std::uint64_t>(s.store.size()) > guard)
                throw StateSpaceTooLarge(estimate, guard);
            if (goal(next)) {
                found = id;
                return true;
            }
            return false;
        });
        if (found >= 0) return found;
    }
    return -1;
}

inline bool test_bit(const std::uint64_t* w, int v) { return (w[v >> 6] >> (v & 63)) & 1; }
inline void flip_bit(std::uint64_t* w, int v) { w[v >> 6] ^= 1ull << (v & 63); }

std::vector<std::uint64_t> encode_tokens(int n, const TokenConfig& c) {
    std::vector<std::uint64_t> w((n + 63) / 64 + (n == 0), 0);
    for (Vertex v : c.vertices()) flip_bit(w.data(), v);
    return w;
}

int popcount(const std::uint64_t* w, std::size_t words) {
    int c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(w[i]);
    return c;
}

// Successors of a token state under the given model.
struct TokenExpander {
    const Graph& g;
    Model model;
    std::size_t words;

    template <class Emit>
    void operator()(const std::uint64_t* cur, Emit&& emit) const {
        const int n = g.num_vertices();
        std::vector<std::uint64_t> next(cur, cur + words);
        auto try_emit = [&](const Move& m, int a, int b) {
            std::copy_n(cur, words, next.begin());
            flip_bit(next.data(), a);
            if (b >= 0) flip_bit(next.data(), b);
            return emit(m, next.data());
        };
        for (Vertex u = 0; u < n; ++u) {
            const bool occupied = test_bit(cur, u);
            switch (model) {
                case Model::Slide:
                    if (!occupied) break;
                    for (Vertex w : g.neighbors(u))
                        if (!test_bit(cur, w) && try_emit(Move::slide(u, w), u, w)) return;
                    break;
                case Model::Jump:
                    if (!occupied) break;
                    for (Vertex w = 0; w < n; ++w)
                        if (!test_bit(cur, w) && try_emit(Move::jump(u, w), u, w)) return;
                    break;
                case Model::AddRemove:
                    if (try_emit(occupied ? Move::remove(u) : Move::add(u), u, -1)) return;
                    break;
                default: throw InvalidArgument("not a token model");
            }
        }
    }
};

bool token_goal(const Graph& g, Problem problem, int k, const std::uint64_t* s, std::size_t words) {
    if (popcount(s, words) != k) return false;
    switch (problem) {
        case Problem::VertexCover:
            for (auto [u, v] : g.edges())
                if (!test_bit(s, u) && !test_bit(s, v)) return false;
            return true;
        case Problem::IndependentSet:
            for (auto [u, v] : g.edges())
                if (test_bit(s, u) && test_bit(s, v)) return false;
            return true;
        case Problem::DominatingSet:
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (test_bit(s, v)) continue;
                bool dominated = false;
                for (Vertex w : g.neighbors(v))
                    if (test_bit(s, w)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) return false;
            }
            return true;
        case Problem::Coloring: break;
    }
    throw InvalidArgument("coloring is not a subset problem");
}

// Fixed-width color fields packed into words without straddling.
struct ColorCodec {
    int bits;
    int per_word;
    std::uint64_t mask;

    explicit ColorCodec(int colors)
        : bits(std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(colors - 1))))),
          per_word(64 / bits),
          mask((1ull << bits) - 1) {}

    std::size_t words(int n) const { return std::max<std::size_t>(1, (n + per_word - 1) / per_word); }
    int get(const std::uint64_t* w, int v) const {
        return static_cast<int>((w[v / per_word] >> ((v % per_word) * bits)) & mask) + 1;
    }
    void set(std::uint64_t* w, int v, int c) const {
        const int shift = (v % per_word) * bits;
        auto& word = w[v / per_word];
        word = (word & ~(mask << shift)) | (static_cast<std::uint64_t>(c - 1) << shift);
    }
};

}  // namespace

double configuration_space_size(const SubsetInstance& inst) {
    const int n = inst.graph.num_vertices();
    const int k = inst.k();
    if (inst.model != Model::AddRemove) return binomial(n, k);
    double total = 0;
    for (int j = std::max(0, k - inst.budget); j <= std::min(n, k + inst.budget); ++j)
        total += binomial(n, j);
    return total;
}

double configuration_space_size(const ColoringInstance& inst) {
    return std::pow(static_cast<double>(inst.colors), inst.graph.num_vertices());
}

SolveResult oracle_solve(const SubsetInstance& inst, const OracleOptions& opts) {
    const Graph& g = inst.graph;
    const int budget = opts.budget.value_or(inst.budget);
    auto init = encode_tokens(g.num_vertices(), inst.start);
    const std::size_t words = init.size();
    Search s(static_cast<int>(words));
    TokenExpander expand{g, inst.model, words};
    const int k = inst.k();
    int found = bfs(s, init, budget, opts.guard_limit, configuration_space_size(inst), expand,
                    [&](const std::uint64_t* st) { return token_goal(g, inst.problem, k, st, words); });
    SolveResult r;
    r.solver = "oracle";
    r.explored = static_cast<std::uint64_t>(s.store.size());
    if (found >= 0) {
        r.yes = true;
        r.min_moves = s.depth[found];
        r.certificate = s.path_to(found);
    }
    return r;
}

SolveResult oracle_solve(const ColoringInstance& inst, const OracleOptions& opts) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    const int budget = opts.budget.value_or(inst.budget);
    ColorCodec codec(inst.colors);
    const std::size_t words = codec.words(n);
    std::vector<std::uint64_t> init(words, 0);
    for (Vertex v = 0; v < n; ++v) codec.set(init.data(), v, inst.coloring[v]);

    auto expand = [&](const std::uint64_t* cur, auto&& emit) {
        std::vector<std::uint64_t> next(cur, cur + words);
        auto exchange = [&](const Move& m) {
            std::copy_n(cur, words, next.begin());
            int cu = codec.get(cur, m.u), cv = codec.get(cur, m.v);
            codec.set(next.data(), m.u, cv);
            codec.set(next.data(), m.v, cu);
            return emit(m, next.data());
        };
        switch (inst.model) {
            case Model::Flip:
                for (Vertex v = 0; v < n; ++v) {
                    const int old = codec.get(cur, v);
                    for (int c = 1; c <= inst.colors; ++c) {
                        if (c == old) continue;
                        std::copy_n(cur, words, next.begin());
                        codec.set(next.data(), v, c);
                        if (emit(Move::flip(v, c), next.data())) return;
                    }
                }
                break;
            case Model::Swap:
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        if (codec.get(cur, u) != codec.get(cur, v) && exchange(Move::swap(u, v)))
                            return;
                break;
            case Model::ColorSlide:
                for (auto [u, v] : g.edges())
                    if (codec.get(cur, u) != codec.get(cur, v) && exchange(Move::cslide(u, v)))
                        return;
                break;
            default: throw InvalidArgument("not a coloring model");
        }
    };
    auto goal = [&](const std::uint64_t* st) {
        for (auto [u, v] : g.edges())
            if (codec.get(st, u) == codec.get(st, v)) return false;
        return true;
    };
    Search s(static_cast<int>(words));
    int found = bfs(s, init, budget, opts.guard_limit, configuration_space_size(inst), expand, goal);
    SolveResult r;
    r.solver = "oracle";
    r.explored = static_cast<std::uint64_t>(s.store.size());
    if (found >= 0) {
        r.yes = true;
        r.min_moves = s.depth[found];
        r.certificate = s.path_to(found);
    }
    return r;
}

SolveResult oracle_solve(const Instance& inst, const OracleOptions& opts) {
    return std::visit([&](const auto& i) { return oracle_solve(i, opts); }, inst);
}

ReachResult oracle_reach_target(const Graph& g, const TokenConfig& start, const TokenConfig& target,
                                const OracleOptions& opts) {
    if (start.size() != target.size())
        throw InvalidArgument("start and target hold different token counts");
    const auto comps = connected_components(g);
    std::vector<int> balance(comps.count(), 0);
    for (Vertex v : start.vertices()) ++balance[comps.component_of[v]];
    for (Vertex v : target.vertices()) --balance[comps.component_of[v]];
    for (int c = 0; c < comps.count(); ++c)
        if (balance[c] != 0)
            throw UnreachableTarget("component containing vertex " +
                                    std::to_string(comps.members[c].front()) +
                                    " holds different token counts in start and target");
    const int n = g.num_vertices();
    auto init = encode_tokens(n, start);
    auto goal_bits = encode_tokens(n, target);
    const std::size_t words = init.size();
    Search s(static_cast<int>(words));
    TokenExpander expand{g, Model::Slide, words};
    int found = bfs(s, init, INT_MAX, opts.guard_limit, binomial(n, start.size()), expand,
                    [&](const std::uint64_t* st) { return std::equal(st, st + words, goal_bits.begin()); });
    if (found < 0) throw UnreachableTarget("target configuration not reachable");
    return {s.depth[found], s.path_to(found), static_cast<std::uint64_t>(s.store.size())};
}

}  // namespace solrec

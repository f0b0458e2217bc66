#include "solrec/instance.hpp"

#include <algorithm>
#include <string>

#include "solrec/errors.hpp"

namespace solrec {

const char* to_string(Problem p) {
    switch (p) {
        case Problem::VertexCover: return "vc";
        case Problem::IndependentSet: return "is";
        case Problem::DominatingSet: return "ds";
        case Problem::Coloring: return "coloring";
    }
    return "?";
}

const char* to_string(Model m) {
    switch (m) {
        case Model::Slide: return "slide";
        case Model::Jump: return "jump";
        case Model::AddRemove: return "add_remove";
        case Model::Flip: return "flip";
        case Model::Swap: return "swap";
        case Model::ColorSlide: return "cslide";
    }
    return "?";
}

bool is_subset_model(Model m) {
    return m == Model::Slide || m == Model::Jump || m == Model::AddRemove;
}

TokenConfig::TokenConfig(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    auto dup = std::adjacent_find(v_.begin(), v_.end());
    if (dup != v_.end())
        throw InvalidArgument("vertex " + std::to_string(*dup) + " holds more than one token");
}

bool TokenConfig::contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }

void TokenConfig::insert(Vertex x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it != v_.end() && *it == x) return;
    v_.insert(it, x);
}

void TokenConfig::erase(Vertex x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it != v_.end() && *it == x) v_.erase(it);
}

std::string to_string(const Move& m) {
    auto s = [](int x) { return std::to_string(x); };
    switch (m.kind) {
        case Move::Kind::Slide: return "slide " + s(m.u) + " " + s(m.v);
        case Move::Kind::Jump: return "jump " + s(m.u) + " " + s(m.v);
        case Move::Kind::Add: return "add " + s(m.u);
        case Move::Kind::Remove: return "remove " + s(m.u);
        case Move::Kind::Flip: return "flip " + s(m.u) + " " + s(m.color);
        case Move::Kind::Swap: return "swap " + s(m.u) + " " + s(m.v);
        case Move::Kind::ColorSlide: return "cslide " + s(m.u) + " " + s(m.v);
    }
    return "?";
}

SubsetInstance make_subset_instance(Problem problem, Model model, Graph graph, TokenConfig start,
                                    std::int64_t budget) {
    if (problem == Problem::Coloring) throw InvalidArgument("coloring is not a subset problem");
    if (!is_subset_model(model))
        throw InvalidArgument(std::string("model ") + to_string(model) +
                              " does not apply to token problems");
    if (budget < 0) throw InvalidArgument("negative budget");
    for (Vertex v : start.vertices())
        if (!graph.contains(v))
            throw InvalidArgument("token vertex " + std::to_string(v) + " out of range");
    const std::int64_t n = graph.num_vertices();
    SubsetInstance inst;
    inst.problem = problem;
    inst.model = model;
    inst.budget = static_cast<int>(std::min(budget, n * n));
    inst.graph = std::move(graph);
    inst.start = std::move(start);
    return inst;
}

ColoringInstance make_coloring_instance(Model model, Graph graph, Coloring coloring, int colors,
                                        std::int64_t budget) {
    if (is_subset_model(model))
        throw InvalidArgument(std::string("model ") + to_string(model) +
                              " does not apply to colorings");
    if (colors < 1) throw InvalidArgument("color count must be at least 1");
    if (budget < 0) throw InvalidArgument("negative budget");
    if (static_cast<int>(coloring.size()) != graph.num_vertices())
        throw InvalidArgument("coloring has " + std::to_string(coloring.size()) +
                              " entries for " + std::to_string(graph.num_vertices()) +
                              " vertices");
    for (std::size_t v = 0; v < coloring.size(); ++v)
        if (coloring[v] < 1 || coloring[v] > colors)
            throw InvalidArgument("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(coloring[v]) + " outside [1," +
                                  std::to_string(colors) + "]");
    const std::int64_t n = graph.num_vertices();
    ColoringInstance inst;
    inst.model = model;
    inst.colors = colors;
    inst.budget = static_cast<int>(std::min(budget, 2 * n * n));
    inst.graph = std::move(graph);
    inst.coloring = std::move(coloring);
    return inst;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : set) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) return false;
    return true;
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> dom(g.num_vertices(), 0);
    for (Vertex v : set) {
        dom[v] = 1;
        for (Vertex w : g.neighbors(v)) dom[w] = 1;
    }
    return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_feasible(Problem problem, const Graph& g, const TokenConfig& config) {
    const auto& vs = config.vertices();
    switch (problem) {
        case Problem::VertexCover: return is_vertex_cover(g, vs);
        case Problem::IndependentSet: return is_independent_set(g, vs);
        case Problem::DominatingSet: return is_dominating_set(g, vs);
        case Problem::Coloring: break;
    }
    throw InvalidArgument("coloring is not a subset problem");
}

bool is_proper(const Graph& g, const Coloring& coloring) {
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

bool is_solution(const SubsetInstance& inst, const TokenConfig& config) {
    return config.size() == inst.k() && is_feasible(inst.problem, inst.graph, config);
}

bool is_solution(const ColoringInstance& inst, const Coloring& coloring) {
    return is_proper(inst.graph, coloring);
}

namespace {

[[noreturn]] void illegal(const Move& m, const std::string& why) {
    throw IllegalMove(to_string(m) + ": " + why);
}

void check_vertex(const Graph& g, const Move& m, Vertex v) {
    if (!g.contains(v)) illegal(m, "vertex " + std::to_string(v) + " out of range");
}

bool kind_matches(Model model, Move::Kind kind) {
    switch (model) {
        case Model::Slide: return kind == Move::Kind::Slide;
        case Model::Jump: return kind == Move::Kind::Jump;
        case Model::AddRemove: return kind == Move::Kind::Add || kind == Move::Kind::Remove;
        case Model::Flip: return kind == Move::Kind::Flip;
        case Model::Swap: return kind == Move::Kind::Swap;
        case Model::ColorSlide: return kind == Move::Kind::ColorSlide;
    }
    return false;
}

}  // namespace

void apply_move(const Graph& g, Model model, TokenConfig& state, const Move& m) {
    if (!kind_matches(model, m.kind))
        illegal(m, std::string("not a move of the ") + to_string(model) + " model");
    check_vertex(g, m, m.u);
    switch (m.kind) {
        case Move::Kind::Slide:
        case Move::Kind::Jump:
            check_vertex(g, m, m.v);
            if (!state.contains(m.u)) illegal(m, "no token on " + std::to_string(m.u));
            if (state.contains(m.v)) illegal(m, "vertex " + std::to_string(m.v) + " is occupied");
            if (m.kind == Move::Kind::Slide && !g.has_edge(m.u, m.v)) illegal(m, "not an edge");
            state.erase(m.u);
            state.insert(m.v);
            break;
        case Move::Kind::Add:
            if (state.contains(m.u)) illegal(m, "vertex " + std::to_string(m.u) + " is occupied");
            state.insert(m.u);
            break;
        case Move::Kind::Remove:
            if (!state.contains(m.u)) illegal(m, "no token on " + std::to_string(m.u));
            state.erase(m.u);
            break;
        default: illegal(m, "not a token move");
    }
}

void apply_move(const Graph& g, Model model, int colors, Coloring& state, const Move& m) {
    if (!kind_matches(model, m.kind))
        illegal(m, std::string("not a move of the ") + to_string(model) + " model");
    check_vertex(g, m, m.u);
    switch (m.kind) {
        case Move::Kind::Flip:
            if (m.color < 1 || m.color > colors)
                illegal(m, "color " + std::to_string(m.color) + " out of range");
            state[m.u] = m.color;
            break;
        case Move::Kind::Swap:
            check_vertex(g, m, m.v);
            if (m.u == m.v) illegal(m, "swap needs two distinct vertices");
            std::swap(state[m.u], state[m.v]);
            break;
        case Move::Kind::ColorSlide:
            check_vertex(g, m, m.v);
            if (!g.has_edge(m.u, m.v)) illegal(m, "not an edge");
            std::swap(state[m.u], state[m.v]);
            break;
        default: illegal(m, "not a color move");
    }
}

Move inverse_move(const Move& m, const Coloring* before) {
    switch (m.kind) {
        case Move::Kind::Slide: return Move::slide(m.v, m.u);
        case Move::Kind::Jump: return Move::jump(m.v, m.u);
        case Move::Kind::Add: return Move::remove(m.u);
        case Move::Kind::Remove: return Move::add(m.u);
        case Move::Kind::Flip:
            if (!before) throw InvalidArgument("inverting a flip needs the prior coloring");
            return Move::flip(m.u, (*before)[m.u]);
        case Move::Kind::Swap: return Move::swap(m.u, m.v);
        case Move::Kind::ColorSlide: return Move::cslide(m.v, m.u);
    }
    return m;
}

ReplayResult replay(const SubsetInstance& inst, std::span<const Move> seq) {
    ReplayResult r;
    TokenConfig state = inst.start;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            apply_move(inst.graph, inst.model, state, seq[i]);
        } catch (const IllegalMove& e) {
            r.legal = false;
            r.failed_index = static_cast<int>(i);
            r.reason = e.what();
            break;
        }
        ++r.cost;
    }
    r.final_state = std::move(state);
    return r;
}

ReplayResult replay(const ColoringInstance& inst, std::span<const Move> seq) {
    ReplayResult r;
    Coloring state = inst.coloring;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            apply_move(inst.graph, inst.model, inst.colors, state, seq[i]);
        } catch (const IllegalMove& e) {
            r.legal = false;
            r.failed_index = static_cast<int>(i);
            r.reason = e.what();
            break;
        }
        ++r.cost;
    }
    r.final_state = std::move(state);
    return r;
}

ReplayResult replay(const Instance& inst, std::span<const Move> seq) {
    return std::visit([&](const auto& i) { return replay(i, seq); }, inst);
}

}  // namespace solrec

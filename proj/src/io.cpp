#include "solrec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "solrec/errors.hpp"

namespace solrec {

Problem parse_problem(std::string_view s) {
    if (s == "vc") return Problem::VertexCover;
    if (s == "is") return Problem::IndependentSet;
    if (s == "ds") return Problem::DominatingSet;
    if (s == "coloring") return Problem::Coloring;
    throw InvalidArgument("unknown problem '" + std::string(s) + "'");
}

Model parse_model(std::string_view s) {
    if (s == "slide") return Model::Slide;
    if (s == "jump") return Model::Jump;
    if (s == "add_remove") return Model::AddRemove;
    if (s == "flip") return Model::Flip;
    if (s == "swap") return Model::Swap;
    if (s == "cslide") return Model::ColorSlide;
    throw InvalidArgument("unknown model '" + std::string(s) + "'");
}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

// Non-empty lines with comments removed.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& msg) {
    throw ParseError(line.number, tok.column, msg);
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
    throw ParseError(line.number, 1, msg);
}

std::int64_t to_int(const Line& line, const Token& tok) {
    std::int64_t v = 0;
    const char* b = tok.text.data();
    const char* e = b + tok.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) fail(line, tok, "expected an integer, got '" + tok.text + "'");
    return v;
}

void expect_args(const Line& line, std::size_t count) {
    if (line.tokens.size() != count + 1)
        fail(line, line.tokens[0], "'" + line.tokens[0].text + "' takes " + std::to_string(count) +
                                       (count == 1 ? " value" : " values"));
}

// Position of a value, for messages about semantic problems.
struct Where {
    std::size_t line = 1, column = 1;
};

[[noreturn]] void fail_at(Where w, const std::string& msg) { throw ParseError(w.line, w.column, msg); }

// Fields shared by the text and JSON readers, with the positions of values.
struct RawInstance {
    std::optional<std::string> problem, model;
    std::optional<std::int64_t> budget, colors;
    std::optional<std::int64_t> n;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<Where> edge_at;
    std::optional<std::vector<std::int64_t>> tokens, coloring;
    std::vector<Where> value_at;  // tokens or coloring entries
    Where problem_at, model_at, budget_at, colors_at, graph_at, list_at;
};

Graph build_graph(const RawInstance& raw) {
    const std::int64_t n = *raw.n;
    if (n < 0) fail_at(raw.graph_at, "vertex count must be non-negative");
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        auto [u, v] = raw.edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail_at(raw.edge_at[i], "edge " + std::to_string(u) + " " + std::to_string(v) +
                                        " has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v) fail_at(raw.edge_at[i], "self-loop on vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            fail_at(raw.edge_at[i],
                    "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Instance build_instance(const RawInstance& raw) {
    if (!raw.problem) fail_at({}, "missing 'problem'");
    if (!raw.model) fail_at({}, "missing 'model'");
    if (!raw.budget) fail_at({}, "missing 'budget'");
    if (!raw.n) fail_at({}, "missing 'graph'");
    Problem problem;
    Model model;
    try {
        problem = parse_problem(*raw.problem);
    } catch (const InvalidArgument& e) {
        fail_at(raw.problem_at, e.what());
    }
    try {
        model = parse_model(*raw.model);
    } catch (const InvalidArgument& e) {
        fail_at(raw.model_at, e.what());
    }
    if (*raw.budget < 0) fail_at(raw.budget_at, "budget must be non-negative");
    const bool coloring = problem == Problem::Coloring;
    if (coloring == is_subset_model(model))
        fail_at(raw.model_at, std::string("model '") + to_string(model) +
                                  "' does not apply to problem '" + to_string(problem) + "'");
    Graph g = build_graph(raw);
    const std::int64_t n = g.num_vertices();
    if (!coloring) {
        if (!raw.tokens) fail_at({}, "missing 'tokens'");
        if (raw.coloring) fail_at(raw.list_at, "'coloring' given for a subset problem");
        std::set<std::int64_t> seen;
        std::vector<Vertex> start;
        for (std::size_t i = 0; i < raw.tokens->size(); ++i) {
            std::int64_t v = (*raw.tokens)[i];
            if (v < 0 || v >= n)
                fail_at(raw.value_at[i], "token vertex " + std::to_string(v) + " outside [0, " +
                                             std::to_string(n) + ")");
            if (!seen.insert(v).second)
                fail_at(raw.value_at[i], "duplicate token vertex " + std::to_string(v));
            start.push_back(static_cast<Vertex>(v));
        }
        return make_subset_instance(problem, model, std::move(g), TokenConfig(std::move(start)),
                                    *raw.budget);
    }
    if (!raw.colors) fail_at({}, "missing 'colors'");
    if (!raw.coloring) fail_at({}, "missing 'coloring'");
    if (raw.tokens) fail_at(raw.list_at, "'tokens' given for a coloring problem");
    const std::int64_t k = *raw.colors;
    if (k < 1 || k > 64) fail_at(raw.colors_at, "color count must lie in [1, 64]");
    if (static_cast<std::int64_t>(raw.coloring->size()) != n)
        fail_at(raw.list_at, "coloring lists " + std::to_string(raw.coloring->size()) +
                                 " colors for " + std::to_string(n) + " vertices");
    Coloring col;
    for (std::size_t i = 0; i < raw.coloring->size(); ++i) {
        std::int64_t c = (*raw.coloring)[i];
        if (c < 1 || c > k)
            fail_at(raw.value_at[i], "color " + std::to_string(c) + " of vertex " +
                                         std::to_string(i) + " outside [1, " + std::to_string(k) +
                                         "]");
        col.push_back(static_cast<int>(c));
    }
    return make_coloring_instance(model, std::move(g), std::move(col), static_cast<int>(k),
                                  *raw.budget);
}

// Reads "graph n m" and the m edge lines that follow; returns the next line index.
std::size_t read_graph(const std::vector<Line>& lines, std::size_t i, RawInstance& raw) {
    const Line& head = lines[i];
    expect_args(head, 2);
    if (raw.n) fail(head, head.tokens[0], "duplicate 'graph' section");
    raw.n = to_int(head, head.tokens[1]);
    const std::int64_t m = to_int(head, head.tokens[2]);
    if (m < 0) fail(head, head.tokens[2], "edge count must be non-negative");
    raw.graph_at = {head.number, head.tokens[0].column};
    for (std::int64_t e = 0; e < m; ++e) {
        if (++i >= lines.size())
            throw ParseError(head.number, head.tokens[2].column,
                             "graph declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(e));
        const Line& l = lines[i];
        if (l.tokens.size() != 2) fail(l, "expected an edge 'u v'");
        raw.edges.emplace_back(to_int(l, l.tokens[0]), to_int(l, l.tokens[1]));
        raw.edge_at.push_back({l.number, l.tokens[0].column});
    }
    return i + 1;
}

std::vector<std::int64_t> read_values(const Line& line, std::vector<Where>& at) {
    std::vector<std::int64_t> out;
    at.clear();
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        out.push_back(to_int(line, line.tokens[t]));
        at.push_back({line.number, line.tokens[t].column});
    }
    return out;
}

Instance parse_text(std::string_view text) {
    auto lines = tokenize(text);
    RawInstance raw;
    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& l = lines[i];
        const std::string& key = l.tokens[0].text;
        auto once = [&](bool present) {
            if (present) fail(l, l.tokens[0], "duplicate '" + key + "'");
        };
        Where at{l.number, l.tokens.size() > 1 ? l.tokens[1].column : l.tokens[0].column};
        if (key == "graph") {
            i = read_graph(lines, i, raw);
            continue;
        } else if (key == "problem") {
            once(raw.problem.has_value());
            expect_args(l, 1);
            raw.problem = l.tokens[1].text;
            raw.problem_at = at;
        } else if (key == "model") {
            once(raw.model.has_value());
            expect_args(l, 1);
            raw.model = l.tokens[1].text;
            raw.model_at = at;
        } else if (key == "budget") {
            once(raw.budget.has_value());
            expect_args(l, 1);
            raw.budget = to_int(l, l.tokens[1]);
            raw.budget_at = at;
        } else if (key == "colors") {
            once(raw.colors.has_value());
            expect_args(l, 1);
            raw.colors = to_int(l, l.tokens[1]);
            raw.colors_at = at;
        } else if (key == "tokens" || key == "coloring") {
            once(raw.tokens.has_value() || raw.coloring.has_value());
            auto values = read_values(l, raw.value_at);
            (key == "tokens" ? raw.tokens : raw.coloring) = std::move(values);
            raw.list_at = {l.number, l.tokens[0].column};
        } else {
            fail(l, l.tokens[0], "unknown section '" + key + "'");
        }
        ++i;
    }
    return build_instance(raw);
}

// Line and column of a byte offset.
Where position_of(std::string_view text, std::size_t offset) {
    Where w;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++w.line;
            w.column = 1;
        } else {
            ++w.column;
        }
    }
    return w;
}

Instance parse_json(std::string_view text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        Where w = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(w.line, w.column, "invalid JSON");
    }
    RawInstance raw;
    try {
        if (!j.is_object()) fail_at({}, "expected a JSON object");
        for (auto& [key, value] : j.items()) {
            if (key == "problem") raw.problem = value.get<std::string>();
            else if (key == "model") raw.model = value.get<std::string>();
            else if (key == "budget") raw.budget = value.get<std::int64_t>();
            else if (key == "colors") raw.colors = value.get<std::int64_t>();
            else if (key == "graph") {
                raw.n = value.at("n").get<std::int64_t>();
                for (auto& e : value.at("edges")) {
                    if (!e.is_array() || e.size() != 2) fail_at({}, "edges must be pairs");
                    raw.edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
                    raw.edge_at.push_back({});
                }
            } else if (key == "tokens" || key == "coloring") {
                auto values = value.get<std::vector<std::int64_t>>();
                raw.value_at.assign(values.size(), Where{});
                (key == "tokens" ? raw.tokens : raw.coloring) = std::move(values);
            } else {
                fail_at({}, "unknown key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        fail_at({}, std::string("malformed field: ") + e.what());
    }
    return build_instance(raw);
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

namespace {

void write_graph(std::ostringstream& out, const Graph& g) {
    out << "graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    if (auto* s = std::get_if<SubsetInstance>(&inst)) {
        out << "problem " << to_string(s->problem) << '\n'
            << "model " << to_string(s->model) << '\n'
            << "budget " << s->budget << '\n';
        write_graph(out, s->graph);
        out << "tokens";
        for (Vertex v : s->start.vertices()) out << ' ' << v;
        out << '\n';
    } else {
        const auto& c = std::get<ColoringInstance>(inst);
        out << "problem coloring\n"
            << "model " << to_string(c.model) << '\n'
            << "colors " << c.colors << '\n'
            << "budget " << c.budget << '\n';
        write_graph(out, c.graph);
        out << "coloring";
        for (int x : c.coloring) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

std::string instance_to_json(const Instance& inst) {
    using nlohmann::json;
    json j;
    auto graph = [](const Graph& g) {
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        return json{{"n", g.num_vertices()}, {"edges", edges}};
    };
    if (auto* s = std::get_if<SubsetInstance>(&inst)) {
        j["problem"] = to_string(s->problem);
        j["model"] = to_string(s->model);
        j["budget"] = s->budget;
        j["graph"] = graph(s->graph);
        j["tokens"] = s->start.vertices();
    } else {
        const auto& c = std::get<ColoringInstance>(inst);
        j["problem"] = "coloring";
        j["model"] = to_string(c.model);
        j["colors"] = c.colors;
        j["budget"] = c.budget;
        j["graph"] = graph(c.graph);
        j["coloring"] = c.coloring;
    }
    return j.dump();
}

std::uint64_t instance_hash(const Instance& inst) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : serialize_instance(inst)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

MoveSequence parse_certificate(std::string_view text) {
    MoveSequence out;
    for (const Line& l : tokenize(text)) {
        const std::string& kind = l.tokens[0].text;
        auto arg = [&](std::size_t i) -> int {
            std::int64_t v = to_int(l, l.tokens[i]);
            if (v < 0 || v > (1 << 30)) fail(l, l.tokens[i], "value out of range");
            return static_cast<int>(v);
        };
        if (kind == "add" || kind == "remove") {
            expect_args(l, 1);
            out.push_back(kind == "add" ? Move::add(arg(1)) : Move::remove(arg(1)));
        } else if (kind == "flip") {
            expect_args(l, 2);
            out.push_back(Move::flip(arg(1), arg(2)));
        } else if (kind == "slide" || kind == "jump" || kind == "swap" || kind == "cslide") {
            expect_args(l, 2);
            int u = arg(1), v = arg(2);
            if (kind == "slide") out.push_back(Move::slide(u, v));
            else if (kind == "jump") out.push_back(Move::jump(u, v));
            else if (kind == "swap") out.push_back(Move::swap(u, v));
            else out.push_back(Move::cslide(u, v));
        } else {
            fail(l, l.tokens[0], "unknown move '" + kind + "'");
        }
    }
    return out;
}

std::string serialize_certificate(const MoveSequence& moves) {
    std::string out;
    for (const Move& m : moves) out += to_string(m) + '\n';
    return out;
}

TreeDecomposition parse_tree_decomposition(std::string_view text) {
    auto lines = tokenize(text);
    std::optional<std::int64_t> bag_count, n;
    std::map<std::int64_t, std::vector<Vertex>> bags;
    std::vector<std::pair<std::int64_t, std::int64_t>> tree_edges;
    std::size_t header_line = 1;
    for (const Line& l : lines) {
        const std::string& key = l.tokens[0].text;
        if (key == "c") continue;
        if (key == "s") {
            if (bag_count) fail(l, "duplicate solution line");
            if (l.tokens.size() != 5 || l.tokens[1].text != "td")
                fail(l, "expected 's td <bags> <width+1> <vertices>'");
            bag_count = to_int(l, l.tokens[2]);
            to_int(l, l.tokens[3]);
            n = to_int(l, l.tokens[4]);
            header_line = l.number;
            if (*bag_count < 0 || *n < 0) fail(l, "counts must be non-negative");
            continue;
        }
        if (!bag_count) fail(l, "missing 's td' line before content");
        if (key == "b") {
            if (l.tokens.size() < 2) fail(l, "expected 'b <id> <vertices...>'");
            std::int64_t id = to_int(l, l.tokens[1]);
            if (id < 1 || id > *bag_count) fail(l, l.tokens[1], "bag id out of range");
            if (bags.count(id)) fail(l, l.tokens[1], "duplicate bag " + std::to_string(id));
            std::vector<Vertex> bag;
            for (std::size_t t = 2; t < l.tokens.size(); ++t) {
                std::int64_t v = to_int(l, l.tokens[t]);
                if (v < 1 || v > *n) fail(l, l.tokens[t], "vertex out of range");
                bag.push_back(static_cast<Vertex>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                fail(l, "repeated vertex in bag " + std::to_string(id));
            bags[id] = std::move(bag);
        } else {
            if (l.tokens.size() != 2) fail(l, "expected a tree edge '<i> <j>'");
            std::int64_t a = to_int(l, l.tokens[0]), b = to_int(l, l.tokens[1]);
            if (a < 1 || a > *bag_count || b < 1 || b > *bag_count || a == b)
                fail(l, "tree edge endpoints out of range");
            tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (!bag_count) throw ParseError(1, 1, "missing 's td' line");
    TreeDecomposition td;
    const int count = static_cast<int>(*bag_count);
    if (count == 0) {
        td.bags = {{}};
        td.parent = {-1};
        td.root = 0;
        return td;
    }
    if (static_cast<int>(bags.size()) != count)
        throw ParseError(header_line, 1, "expected " + std::to_string(count) + " bags, found " +
                                             std::to_string(bags.size()));
    if (static_cast<int>(tree_edges.size()) != count - 1)
        throw ParseError(header_line, 1, "a tree on " + std::to_string(count) + " bags needs " +
                                             std::to_string(count - 1) + " edges");
    for (auto& [id, bag] : bags) td.bags.push_back(bag);
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
    }
    td.parent.assign(count, -2);
    td.parent[0] = -1;
    td.root = 0;
    std::vector<int> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : adj[queue[q]])
            if (td.parent[w] == -2) {
                td.parent[w] = queue[q];
                queue.push_back(w);
            }
    if (static_cast<int>(queue.size()) != count)
        throw ParseError(header_line, 1, "tree edges do not connect all bags");
    return td;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td, int num_vertices) {
    std::ostringstream out;
    out << "s td " << td.num_nodes() << ' ' << td.width() + 1 << ' ' << num_vertices << '\n';
    for (int i = 0; i < td.num_nodes(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (int i = 0; i < td.num_nodes(); ++i)
        if (td.parent[i] >= 0) out << td.parent[i] + 1 << ' ' << i + 1 << '\n';
    return out.str();
}

BaseGraph parse_base_graph(std::string_view text) {
    auto lines = tokenize(text);
    RawInstance raw;
    BaseGraph base;
    struct Pending {
        std::vector<std::int64_t> values;
        std::vector<Where> at;
    };
    std::optional<Pending> part, pre;
    std::map<std::int64_t, std::pair<std::vector<int>, Where>> lists;
    std::optional<std::vector<std::string>> labels;
    Where labels_at;
    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& l = lines[i];
        const std::string& key = l.tokens[0].text;
        if (key == "graph") {
            i = read_graph(lines, i, raw);
            continue;
        }
        if (key == "labels") {
            if (labels) fail(l, l.tokens[0], "duplicate 'labels'");
            labels.emplace();
            for (std::size_t t = 1; t < l.tokens.size(); ++t) labels->push_back(l.tokens[t].text);
            labels_at = {l.number, l.tokens[0].column};
        } else if (key == "part" || key == "precoloring") {
            auto& slot = key == "part" ? part : pre;
            if (slot) fail(l, l.tokens[0], "duplicate '" + key + "'");
            slot.emplace();
            slot->values = read_values(l, slot->at);
            slot->at.insert(slot->at.begin(), Where{l.number, l.tokens[0].column});
        } else if (key == "list") {
            if (l.tokens.size() < 2) fail(l, "expected 'list <vertex> <colors...>'");
            std::int64_t v = to_int(l, l.tokens[1]);
            if (lists.count(v)) fail(l, l.tokens[1], "duplicate list for vertex " + std::to_string(v));
            std::vector<int> colors;
            for (std::size_t t = 2; t < l.tokens.size(); ++t)
                colors.push_back(static_cast<int>(to_int(l, l.tokens[t])));
            lists[v] = {colors, Where{l.number, l.tokens[1].column}};
        } else {
            fail(l, l.tokens[0], "unknown section '" + key + "'");
        }
        ++i;
    }
    if (!raw.n) throw ParseError(1, 1, "missing 'graph'");
    base.graph = build_graph(raw);
    const std::size_t n = static_cast<std::size_t>(base.graph.num_vertices());
    if (labels) {
        if (labels->size() != n) fail_at(labels_at, "expected " + std::to_string(n) + " labels");
        std::set<std::string> seen(labels->begin(), labels->end());
        if (seen.size() != n) fail_at(labels_at, "labels must be distinct");
        base.labels = std::move(*labels);
    }
    auto take = [&](const std::optional<Pending>& p, const char* what) {
        std::vector<int> out;
        if (!p) return out;
        if (p->values.size() != n)
            fail_at(p->at[0], std::string("'") + what + "' needs one entry per vertex");
        for (auto v : p->values) out.push_back(static_cast<int>(v));
        return out;
    };
    base.part = take(part, "part");
    base.precoloring = take(pre, "precoloring");
    if (!lists.empty()) {
        base.lists.assign(n, {});
        for (auto& [v, entry] : lists) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                fail_at(entry.second, "list for vertex " + std::to_string(v) + " out of range");
            base.lists[v] = entry.first;
        }
    }
    return base;
}

std::string serialize_base_graph(const BaseGraph& base) {
    std::ostringstream out;
    write_graph(out, base.graph);
    auto row = [&](const char* key, const auto& values) {
        if (values.empty()) return;
        out << key;
        for (const auto& v : values) out << ' ' << v;
        out << '\n';
    };
    row("labels", base.labels);
    row("part", base.part);
    row("precoloring", base.precoloring);
    for (std::size_t v = 0; v < base.lists.size(); ++v) {
        out << "list " << v;
        for (int c : base.lists[v]) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

}  // namespace solrec

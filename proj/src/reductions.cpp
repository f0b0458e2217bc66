#include "solrec/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "solrec/errors.hpp"
#include "solrec/tree_decomposition.hpp"

namespace solrec {

std::string BaseGraph::label(Vertex v) const {
    return labels.empty() ? std::to_string(v) : labels[v];
}

namespace {

int choose2(int x) { return x * (x - 1) / 2; }

// Collects gadget vertices with their names and base owners.
class Gadget {
public:
    explicit Gadget(const BaseGraph& base) : base_(base) {
        if (!base.labels.empty() &&
            static_cast<int>(base.labels.size()) != base.graph.num_vertices())
            throw InvalidArgument("label count does not match the vertex count");
    }

    Vertex add(std::string name) {
        names_.push_back(std::move(name));
        return g_.add_vertex();
    }
    // Vertex owned by base vertex v, named "<label>" or "<label>.<role>".
    Vertex own(Vertex v, const std::string& role) {
        const std::string l = base_.label(v);
        Vertex x = add(role.empty() ? l : l + "." + role);
        map_[l].push_back(x);
        return x;
    }
    // Copy of the base graph on ids 0..n-1.
    void copy_base() {
        for (Vertex v = 0; v < base_.graph.num_vertices(); ++v) own(v, "");
        for (auto [u, v] : base_.graph.edges()) edge(u, v);
    }
    void edge(Vertex u, Vertex v) { g_.add_edge(u, v); }

    Graph graph() const { return g_.build(); }

    ReductionOutput finish(const char* generator, Instance inst, const StructuralClaims& claims);

private:
    const BaseGraph& base_;
    GraphBuilder g_;
    std::vector<std::string> names_;
    std::map<std::string, std::vector<Vertex>> map_;
};

void claim_failed(const char* generator, const std::string& what) {
    throw std::logic_error(std::string(generator) + ": gadget violates its " + what + " claim");
}

ReductionOutput Gadget::finish(const char* generator, Instance inst,
                               const StructuralClaims& claims) {
    ReductionOutput out;
    out.generator = generator;
    out.instance = std::move(inst);
    out.names = std::move(names_);
    out.vertex_map = std::move(map_);
    out.claims = claims;

    const Graph& h = std::visit([](const auto& i) -> const Graph& { return i.graph; },
                                out.instance);
    if (claims.bipartite && !is_bipartite(h)) claim_failed(generator, "bipartite");
    if (claims.degeneracy && degeneracy_order(h).degeneracy > *claims.degeneracy)
        claim_failed(generator, "degeneracy");
    if (claims.max_degree && h.max_degree() != *claims.max_degree)
        claim_failed(generator, "max degree");
    if (claims.planar) {
        auto base_planar = is_planar(base_.graph);
        if (base_planar) {
            if (*base_planar && !*is_planar(h)) claim_failed(generator, "planarity");
            out.claims.planarity_verified = true;
        }
    }
    return out;
}

void require_kappa(int kappa, int min) {
    if (kappa < min)
        throw InvalidArgument("kappa must be at least " + std::to_string(min));
}

// Part index per vertex; every part must be a clique (want_clique) or an
// independent set.
std::vector<std::vector<Vertex>> parts_of(const BaseGraph& base, int kappa, bool want_clique) {
    const Graph& g = base.graph;
    if (static_cast<int>(base.part.size()) != g.num_vertices())
        throw PartitionInvalid("partition must assign every vertex");
    std::vector<std::vector<Vertex>> parts(kappa);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int p = base.part[v];
        if (p < 0 || p >= kappa)
            throw PartitionInvalid("vertex " + base.label(v) + " has part " + std::to_string(p) +
                                   " outside [0, " + std::to_string(kappa) + ")");
        parts[p].push_back(v);
    }
    for (int p = 0; p < kappa; ++p)
        for (std::size_t a = 0; a < parts[p].size(); ++a)
            for (std::size_t b = a + 1; b < parts[p].size(); ++b)
                if (g.has_edge(parts[p][a], parts[p][b]) != want_clique)
                    throw PartitionInvalid("part " + std::to_string(p) + " is not " +
                                           (want_clique ? "a clique" : "independent"));
    return parts;
}

SubsetInstance subset(Problem p, Graph h, std::vector<Vertex> start, int budget) {
    return make_subset_instance(p, Model::Slide, std::move(h), TokenConfig(std::move(start)),
                                budget);
}

}  // namespace

ReductionOutput red_vc_to_vcd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 0);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    Gadget b(base);
    b.copy_base();
    std::vector<Vertex> start;
    for (Vertex v = 0; v < n; ++v) {
        Vertex x = b.own(v, "x"), y = b.own(v, "y"), z = b.own(v, "z");
        b.edge(v, x);
        b.edge(x, y);
        b.edge(y, z);
        start.push_back(x);
        start.push_back(y);
    }
    StructuralClaims c;
    c.planar = true;
    c.max_degree = n == 0 ? 0 : std::max(g.max_degree() + 1, 2);
    return b.finish("vc_to_vcd", subset(Problem::VertexCover, b.graph(), start, kappa), c);
}

ReductionOutput red_clique_to_vcd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 2);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    const int p = choose2(kappa);
    Gadget b(base);
    std::vector<Vertex> r(p), z(p), start;
    for (int i = 0; i < p; ++i) r[i] = b.add("r" + std::to_string(i + 1));
    for (int i = 0; i < p; ++i) {
        z[i] = b.add("z" + std::to_string(i + 1));
        b.edge(r[i], z[i]);
    }
    std::vector<Vertex> y;
    for (auto [u, v] : g.edges()) {
        const std::string e = base.label(u) + "-" + base.label(v);
        std::vector<Vertex> gs;
        for (int i = 0; i < p; ++i) {
            const std::string idx = std::to_string(i + 1);
            Vertex gv = b.add("g" + idx + "." + e);
            Vertex hv = b.add("h" + idx + "." + e);
            b.edge(gv, z[i]);
            b.edge(gv, hv);
            gs.push_back(gv);
            start.push_back(gv);
        }
        y.push_back(b.add("y." + e));
        for (Vertex gv : gs) b.edge(gv, y.back());
        start.push_back(y.back());
    }
    std::vector<Vertex> x(n), s(n);
    for (Vertex v = 0; v < n; ++v) {
        x[v] = b.own(v, "x");
        s[v] = b.own(v, "s");
        b.edge(x[v], s[v]);
        start.push_back(s[v]);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        b.edge(y[e], x[u]);
        b.edge(y[e], x[v]);
    }
    StructuralClaims c;
    c.bipartite = true;
    c.degeneracy = 2;
    return b.finish("clique_to_vcd",
                    subset(Problem::VertexCover, b.graph(), start, 2 * p + kappa), c);
}

ReductionOutput red_is_to_isd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 0);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    if (kappa > 2 * n) throw InvalidArgument("kappa must be at most 2n");
    Gadget b(base);
    b.copy_base();
    std::vector<Vertex> start;
    for (Vertex v = 0; v < n; ++v) {
        Vertex w = b.own(v, "w"), x = b.own(v, "x"), cv = b.own(v, "c");
        Vertex y = b.own(v, "y"), z = b.own(v, "z");
        b.edge(w, x);
        b.edge(x, cv);
        b.edge(cv, y);
        b.edge(y, z);
        b.edge(v, cv);
        start.insert(start.end(), {x, cv, y});
    }
    StructuralClaims c;
    c.planar = true;
    c.max_degree = n == 0 ? 0 : std::max(g.max_degree() + 1, 3);
    return b.finish("is_to_isd",
                    subset(Problem::IndependentSet, b.graph(), start, 2 * n - kappa), c);
}

ReductionOutput red_mis_to_isd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 1);
    auto parts = parts_of(base, kappa, true);
    Gadget b(base);
    b.copy_base();
    std::vector<Vertex> start;
    for (int i = 0; i < kappa; ++i) {
        const std::string idx = std::to_string(i + 1);
        Vertex u = b.add("u" + idx), w = b.add("w" + idx);
        b.edge(u, w);
        for (Vertex v : parts[i]) b.edge(u, v);
        start.push_back(u);
        start.push_back(w);
    }
    return b.finish("mis_to_isd", subset(Problem::IndependentSet, b.graph(), start, kappa), {});
}

ReductionOutput red_mcc_to_isd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 1);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    auto parts = parts_of(base, kappa, false);
    Gadget b(base);
    std::vector<Vertex> x(n), y(n), z(n), start;
    for (Vertex v = 0; v < n; ++v) {
        x[v] = b.own(v, "x");
        y[v] = b.own(v, "y");
        z[v] = b.own(v, "z");
        b.edge(x[v], y[v]);
        b.edge(y[v], z[v]);
        start.push_back(y[v]);
    }
    for (int i = 0; i < kappa; ++i) {
        const std::string idx = std::to_string(i + 1);
        Vertex u = b.add("u" + idx), w = b.add("w" + idx);
        b.edge(u, w);
        for (Vertex v : parts[i]) b.edge(u, z[v]);
        start.push_back(u);
        start.push_back(w);
    }
    // pair_u[i][j] for i < j
    std::vector<std::vector<Vertex>> pair_u(kappa, std::vector<Vertex>(kappa, -1));
    for (int i = 0; i < kappa; ++i)
        for (int j = i + 1; j < kappa; ++j) {
            const std::string idx = std::to_string(i + 1) + "," + std::to_string(j + 1);
            Vertex u = b.add("u" + idx), w = b.add("w" + idx);
            b.edge(u, w);
            pair_u[i][j] = u;
            start.push_back(u);
            start.push_back(w);
        }
    for (auto [u, v] : g.edges()) {
        const std::string e = base.label(u) + "-" + base.label(v);
        Vertex ev = b.add("e." + e);
        int i = std::min(base.part[u], base.part[v]), j = std::max(base.part[u], base.part[v]);
        b.edge(pair_u[i][j], ev);
        for (Vertex end : {u, v}) {
            const std::string side = e + "." + base.label(end);
            Vertex wv = b.add("W." + side), zv = b.add("Z." + side);
            b.edge(ev, wv);
            b.edge(wv, zv);
            b.edge(zv, y[end]);
            start.push_back(wv);
        }
    }
    StructuralClaims c;
    c.bipartite = true;
    c.degeneracy = 2;
    const int p = choose2(kappa);
    return b.finish("mcc_to_isd",
                    subset(Problem::IndependentSet, b.graph(), start, 3 * p + 2 * kappa), c);
}

ReductionOutput red_ds_to_dsd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 0);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    Gadget b(base);
    b.copy_base();
    std::vector<Vertex> start;
    for (Vertex v = 0; v < n; ++v) {
        Vertex w = b.own(v, "w"), x = b.own(v, "x"), y = b.own(v, "y"), z = b.own(v, "z");
        Vertex u = b.own(v, "u");
        b.edge(v, w);
        b.edge(w, x);
        b.edge(x, y);
        b.edge(y, z);
        b.edge(u, v);
        b.edge(u, x);
        start.push_back(x);
        start.push_back(y);
    }
    StructuralClaims c;
    c.planar = true;
    c.max_degree = n == 0 ? 0 : std::max(g.max_degree() + 2, 3);
    return b.finish("ds_to_dsd", subset(Problem::DominatingSet, b.graph(), start, 2 * kappa), c);
}

ReductionOutput red_ds_to_dsd_w2(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 0);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    Gadget b(base);
    std::vector<Vertex> left(n), right(n), start;
    for (Vertex v = 0; v < n; ++v) left[v] = b.own(v, "L");
    for (Vertex v = 0; v < n; ++v) right[v] = b.own(v, "R");
    for (Vertex v = 0; v < n; ++v) {
        b.edge(left[v], right[v]);
        for (Vertex w : g.neighbors(v)) b.edge(left[v], right[w]);
    }
    Vertex u = b.add("u");
    start.push_back(u);
    for (int i = 0; i < kappa; ++i) {
        Vertex vi = b.add("v" + std::to_string(i + 1));
        for (Vertex l : left) b.edge(vi, l);
        start.push_back(vi);
    }
    for (Vertex l : left) b.edge(u, l);
    for (int i = 0; i <= kappa; ++i) b.edge(u, b.add("w" + std::to_string(i + 1)));
    StructuralClaims c;
    c.bipartite = true;
    return b.finish("ds_to_dsd_w2", subset(Problem::DominatingSet, b.graph(), start, kappa), c);
}

ReductionOutput red_vcd_to_dsd(const SubsetInstance& inst, const std::vector<std::string>& labels) {
    if (inst.problem != Problem::VertexCover || inst.model != Model::Slide)
        throw InvalidArgument("vcd_to_dsd needs a vertex cover sliding instance");
    const Graph& g = inst.graph;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0)
            throw InvalidArgument("vcd_to_dsd needs a base graph without isolated vertices");
    BaseGraph base(g);
    base.labels = labels;
    Gadget b(base);
    b.copy_base();
    for (auto [u, v] : g.edges()) {
        Vertex e = b.add("e." + base.label(u) + "-" + base.label(v));
        b.edge(e, u);
        b.edge(e, v);
    }
    StructuralClaims c;
    if (is_bipartite(g) && degeneracy_order(g).degeneracy <= 2) c.degeneracy = 2;
    return b.finish("vcd_to_dsd",
                    subset(Problem::DominatingSet, b.graph(), inst.start.vertices(), inst.budget),
                    c);
}

ReductionOutput red_likc_to_cd(const BaseGraph& base, int k, Model model) {
    if (k < 3) throw InvalidArgument("list coloring reduction needs k >= 3");
    if (is_subset_model(model)) throw InvalidArgument("coloring model required");
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    if (static_cast<int>(base.lists.size()) != n)
        throw InvalidArgument("every vertex needs a color list");
    std::vector<std::vector<char>> allowed(n, std::vector<char>(k + 1, 0));
    for (Vertex v = 0; v < n; ++v) {
        if (base.lists[v].empty()) throw EmptyList(v);
        for (int c : base.lists[v]) {
            if (c < 1 || c > k)
                throw InvalidArgument("color " + std::to_string(c) + " of vertex " +
                                      base.label(v) + " outside [1, " + std::to_string(k) + "]");
            allowed[v][c] = 1;
        }
    }
    const int budget = model == Model::Flip ? n * (n + 2) : n * (n + 1);
    auto next = [k](int c) { return c < k ? c + 1 : 1; };
    Gadget b(base);
    b.copy_base();
    Coloring col(n, k);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 1; i < k; ++i) {
            b.edge(v, b.own(v, "u" + std::to_string(i)));
            col.push_back(i);
        }
        for (int c = 1; c <= k; ++c) {
            const int count = allowed[v][c] ? n : budget + 1;
            for (int i = 1; i <= count; ++i) {
                const std::string idx = std::to_string(c) + "." + std::to_string(i);
                Vertex x = b.own(v, "x" + idx);
                b.edge(v, x);
                col.push_back(c);
                if (allowed[v][c]) {
                    b.edge(x, b.own(v, "y" + idx));
                    col.push_back(next(c));
                }
            }
        }
    }
    StructuralClaims c;
    c.planar = true;
    c.bipartite = is_bipartite(g);
    return b.finish("likc_to_cd", make_coloring_instance(model, b.graph(), col, k, budget), c);
}

ReductionOutput red_mis_to_cd(const BaseGraph& base, int kappa) {
    require_kappa(kappa, 1);
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    auto parts = parts_of(base, kappa, false);
    for (int i = 0; i < kappa; ++i)
        if (parts[i].empty())
            throw PartitionInvalid("part " + std::to_string(i) + " is empty");
    Gadget b(base);
    b.copy_base();
    std::vector<int> part_of(base.part);
    for (int i = 0; i < kappa; ++i) {
        int pad = 0;
        while (static_cast<int>(parts[i].size()) < 3 * kappa + 1) {
            parts[i].push_back(
                b.add("pad" + std::to_string(i + 1) + "." + std::to_string(++pad)));
            part_of.push_back(i);
        }
    }
    const int padded = static_cast<int>(part_of.size());
    for (Vertex p = n; p < padded; ++p)
        for (Vertex v = 0; v < padded; ++v)
            if (part_of[v] != part_of[p] && (v < n || v > p)) b.edge(p, v);
    Coloring col(padded);
    for (Vertex v = 0; v < padded; ++v) col[v] = part_of[v] + 1;
    std::vector<Vertex> u(kappa), w(kappa + 1);
    for (int i = 0; i < kappa; ++i) {
        u[i] = b.add("u" + std::to_string(i + 1));
        col.push_back(kappa + 1);
        for (Vertex v : parts[i]) b.edge(u[i], v);
    }
    for (int j = 0; j <= kappa; ++j) {
        w[j] = b.add("w" + std::to_string(j + 1));
        col.push_back(j < kappa ? kappa + 2 : kappa + 1);
        for (int i = 0; i < kappa; ++i) b.edge(u[i], w[j]);
        for (int l = 0; l < j; ++l) b.edge(w[l], w[j]);
    }
    return b.finish("mis_to_cd",
                    make_coloring_instance(Model::ColorSlide, b.graph(), col, kappa + 2,
                                           2 * kappa),
                    {});
}

namespace {

// Extends a decomposition of the base by one bag {v, p} per pendant vertex p
// of v. Its width bounds the treewidth of the gadget.
int pendant_extended_width(const Graph& base, const Graph& h) {
    const int n = base.num_vertices();
    TreeDecomposition td;
    if (n <= kDefaultExactLimit)
        td = decomposition_from_ordering(base, exact_treewidth_ordering(base));
    else
        td = decomposition_from_ordering(base, min_fill_ordering(base));
    std::vector<int> home(n, -1);
    for (int i = 0; i < td.num_nodes(); ++i)
        for (Vertex v : td.bags[i])
            if (home[v] < 0) home[v] = i;
    for (Vertex p = n; p < h.num_vertices(); ++p) {
        if (h.degree(p) != 1 || h.neighbors(p)[0] >= n)
            throw std::logic_error("prext_to_cd: added vertex is not a pendant of the base");
        Vertex v = h.neighbors(p)[0];
        td.bags.push_back({v, p});
        td.parent.push_back(home[v]);
    }
    validate(h, td);
    return td.width();
}

}  // namespace

ReductionOutput red_prext_to_cd(const BaseGraph& base, int r) {
    if (r < 2) throw InvalidArgument("precoloring extension needs r >= 2");
    const Graph& g = base.graph;
    const int n = g.num_vertices();
    if (static_cast<int>(base.precoloring.size()) != n)
        throw InvalidArgument("precoloring must have one entry per vertex");
    int w_size = 0;
    for (Vertex v = 0; v < n; ++v) {
        int c = base.precoloring[v];
        if (c < 0 || c > r)
            throw InvalidArgument("precolor " + std::to_string(c) + " of vertex " +
                                  base.label(v) + " outside [0, " + std::to_string(r) + "]");
        if (c) ++w_size;
    }
    for (auto [u, v] : g.edges())
        if (base.precoloring[u] && base.precoloring[u] == base.precoloring[v])
            throw ImproperPrecoloring("precolored vertices " + base.label(u) + " and " +
                                      base.label(v) + " share color " +
                                      std::to_string(base.precoloring[u]));
    Gadget b(base);
    b.copy_base();
    Coloring col(n);
    for (Vertex v = 0; v < n; ++v) {
        const int c = base.precoloring[v];
        col[v] = c ? c : r;
        for (int d = 1; d <= r; ++d) {
            if (d == c || (!c && d == r)) continue;
            const int count = c ? n : 1;
            for (int i = 1; i <= count; ++i) {
                b.edge(v, b.own(v, "p" + std::to_string(d) + "." + std::to_string(i)));
                col.push_back(d);
            }
        }
    }
    Graph h = b.graph();
    StructuralClaims c;
    if (g.num_edges() > 0) {
        const int base_width =
            n <= kDefaultExactLimit ? treewidth_exact(g)
                                    : decomposition_from_ordering(g, min_fill_ordering(g)).width();
        if (pendant_extended_width(g, h) > base_width)
            claim_failed("prext_to_cd", "treewidth");
        c.treewidth_preserved = true;
    }
    return b.finish("prext_to_cd",
                    make_coloring_instance(Model::ColorSlide, std::move(h), col, r, n - w_size), c);
}

const std::vector<GeneratorInfo>& generators() {
    static const std::vector<GeneratorInfo> list = {
        {"vc_to_vcd", "graph"},          {"clique_to_vcd", "graph"},
        {"is_to_isd", "graph"},          {"mis_to_isd", "partitioned"},
        {"mcc_to_isd", "partitioned"},   {"ds_to_dsd", "graph"},
        {"ds_to_dsd_w2", "graph"},       {"vcd_to_dsd", "vcd"},
        {"likc_to_cd", "lists"},         {"mis_to_cd", "partitioned"},
        {"prext_to_cd", "precolored"},
    };
    return list;
}

ReductionOutput generate(const std::string& name, const BaseGraph& base, int param, Model model,
                         const SubsetInstance* vcd_base) {
    if (name == "vc_to_vcd") return red_vc_to_vcd(base, param);
    if (name == "clique_to_vcd") return red_clique_to_vcd(base, param);
    if (name == "is_to_isd") return red_is_to_isd(base, param);
    if (name == "mis_to_isd") return red_mis_to_isd(base, param);
    if (name == "mcc_to_isd") return red_mcc_to_isd(base, param);
    if (name == "ds_to_dsd") return red_ds_to_dsd(base, param);
    if (name == "ds_to_dsd_w2") return red_ds_to_dsd_w2(base, param);
    if (name == "vcd_to_dsd") {
        if (!vcd_base) throw InvalidArgument("vcd_to_dsd needs a base instance");
        return red_vcd_to_dsd(*vcd_base, base.labels);
    }
    if (name == "likc_to_cd") return red_likc_to_cd(base, param, model);
    if (name == "mis_to_cd") return red_mis_to_cd(base, param);
    if (name == "prext_to_cd") return red_prext_to_cd(base, param);
    throw InvalidArgument("unknown generator '" + name + "'");
}

}  // namespace solrec

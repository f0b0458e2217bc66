#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solrec/graph.hpp"
#include "solrec/instance.hpp"

namespace solrec {

// Input of a generator. Only the fields a generator reads need to be filled.
struct BaseGraph {
    Graph graph;
    std::vector<std::string> labels;      // empty means decimal ids
    std::vector<int> part;                // part index in [0, kappa) per vertex
    std::vector<std::vector<int>> lists;  // allowed colors per vertex
    std::vector<int> precoloring;         // 0 leaves the vertex free

    BaseGraph() = default;
    BaseGraph(Graph g) : graph(std::move(g)) {}

    std::string label(Vertex v) const;
};

// Structural properties a gadget is declared to have. Every claim except
// planarity is checked when the gadget is built; planarity is checked only
// when the library was built with the planarity checker.
struct StructuralClaims {
    bool planar = false;  // holds whenever the base graph is planar
    bool bipartite = false;
    std::optional<int> degeneracy;  // upper bound
    std::optional<int> max_degree;  // exact value
    bool treewidth_preserved = false;
    bool planarity_verified = false;
};

struct ReductionOutput {
    std::string generator;
    Instance instance;
    std::vector<std::string> names;                          // per gadget vertex
    std::map<std::string, std::vector<Vertex>> vertex_map;  // base label -> gadget vertices
    StructuralClaims claims;

    const SubsetInstance& subset() const { return std::get<SubsetInstance>(instance); }
    const ColoringInstance& coloring() const { return std::get<ColoringInstance>(instance); }
};

// nullopt when the planarity checker is not compiled in.
std::optional<bool> is_planar(const Graph& g);

ReductionOutput red_vc_to_vcd(const BaseGraph& base, int kappa);
ReductionOutput red_clique_to_vcd(const BaseGraph& base, int kappa);
ReductionOutput red_is_to_isd(const BaseGraph& base, int kappa);
// base.part must split the vertices into kappa cliques.
ReductionOutput red_mis_to_isd(const BaseGraph& base, int kappa);
// base.part must split the vertices into kappa independent sets.
ReductionOutput red_mcc_to_isd(const BaseGraph& base, int kappa);
ReductionOutput red_ds_to_dsd(const BaseGraph& base, int kappa);
ReductionOutput red_ds_to_dsd_w2(const BaseGraph& base, int kappa);
// The base must be a vertex cover sliding instance without isolated vertices.
ReductionOutput red_vcd_to_dsd(const SubsetInstance& base,
                               const std::vector<std::string>& labels = {});
// Lists from base.lists, colors 1..k. The budget is n(n+1) for swaps and
// color slides and n(n+2) for flips.
ReductionOutput red_likc_to_cd(const BaseGraph& base, int k, Model model = Model::ColorSlide);
// Parts shorter than 3*kappa+1 are padded with vertices adjacent to every
// vertex outside their part.
ReductionOutput red_mis_to_cd(const BaseGraph& base, int kappa);
// W is the set of vertices with a nonzero base.precoloring entry.
ReductionOutput red_prext_to_cd(const BaseGraph& base, int r);

struct GeneratorInfo {
    const char* name;
    const char* base_kind;  // "graph", "partitioned", "lists", "precolored", "vcd"
};

// The generators reachable through generate(), in a fixed order.
const std::vector<GeneratorInfo>& generators();

// Dispatch by name. `param` is kappa, k or r depending on the generator; the
// vcd generator reads `vcd_base` instead of `base`.
ReductionOutput generate(const std::string& name, const BaseGraph& base, int param,
                         Model model = Model::ColorSlide,
                         const SubsetInstance* vcd_base = nullptr);

}  // namespace solrec

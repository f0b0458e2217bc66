#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solrec/instance.hpp"
#include "solrec/tree_decomposition.hpp"

namespace solrec {

// Fixed data for one run of the (q, l, A, B) program.
struct DPContext {
    const Graph* graph = nullptr;
    Problem problem = Problem::VertexCover;
    std::vector<char> in_start;  // per vertex
    int k = 0;
    int budget = 0;

    static DPContext from(const SubsetInstance& inst);
};

// Sol table of one node. Keys hold (q, A, B) over the sorted bag; the value is
// the set of slide counts l in [0, budget] for which the state is realizable.
struct DPTable {
    std::vector<Vertex> bag;
    std::vector<char> subtree;  // vertices of G_i
    std::unordered_map<std::string, std::vector<std::uint64_t>> entries;

    bool sol(int q, int l, const std::vector<int>& a, const std::vector<int>& b) const;
    std::optional<int> min_budget(int q, const std::vector<int>& a, const std::vector<int>& b) const;
    std::size_t num_states() const { return entries.size(); }

    static std::string key(int q, const std::vector<int>& a, const std::vector<int>& b);
    // Inverse of key() for a bag of the given size.
    static void decode(const std::string& key, int& q, std::vector<int>& a, std::vector<int>& b);
};

DPTable dp_leaf(const DPContext& ctx);
DPTable dp_introduce(const DPContext& ctx, const DPTable& child, Vertex v);
DPTable dp_forget(const DPContext& ctx, const DPTable& child, Vertex v);
DPTable dp_join(const DPContext& ctx, const DPTable& left, const DPTable& right);

// True when some bag vertex u whose neighbours are all forgotten still expects flow.
bool locally_invalid(const DPContext& ctx, const DPTable& table, const std::vector<int>& b);

// Tables for every node of the decomposition, in node order.
std::vector<DPTable> dp_all_tables(const DPContext& ctx, const NiceTreeDecomposition& ntd);

// Decision and minimum budget for VC or IS discovery under sliding. Uses a
// min-fill decomposition when none is supplied. No certificate.
SolveResult solve_discovery_tw(const SubsetInstance& inst,
                               const std::optional<NiceTreeDecomposition>& ntd = std::nullopt);

}  // namespace solrec

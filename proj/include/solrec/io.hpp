#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "solrec/instance.hpp"
#include "solrec/reductions.hpp"
#include "solrec/tree_decomposition.hpp"

namespace solrec {

// Instance files, line oriented, '#' starts a comment:
//
//   problem vc            vc | is | ds | coloring
//   model slide           slide | jump | add_remove | flip | swap | cslide
//   colors 2              coloring only
//   budget 3
//   graph 4 3             vertex and edge count, then one "u v" line per edge
//   0 1
//   1 2
//   2 3
//   tokens 0 3            subset problems
//   coloring 1 1 2 2      colorings, one color per vertex
//
// A JSON object with the same keys ("graph": {"n": 4, "edges": [[0, 1], ...]})
// is accepted as well. Both throw ParseError with a position.
Instance parse_instance(std::string_view text);

// Canonical text form; parse_instance(serialize_instance(i)) reproduces i.
std::string serialize_instance(const Instance& inst);
std::string instance_to_json(const Instance& inst);

// FNV-1a over the canonical text form.
std::uint64_t instance_hash(const Instance& inst);
std::string hash_hex(std::uint64_t h);

// One move per line: "slide u v", "jump u v", "add v", "remove v",
// "flip v c", "swap u v", "cslide u v".
MoveSequence parse_certificate(std::string_view text);
std::string serialize_certificate(const MoveSequence& moves);

// PACE treewidth exchange format: "s td <bags> <width+1> <n>", then
// "b <id> <v...>" lines and tree edges "<i> <j>" with 1-based ids. The first
// bag becomes the root.
TreeDecomposition parse_tree_decomposition(std::string_view text);
std::string serialize_tree_decomposition(const TreeDecomposition& td, int num_vertices);

// Base graphs for the generators: a graph section plus optional
//   labels a b c
//   part 0 1 0
//   precoloring 1 0 0
//   list 0 1 2      allowed colors of vertex 0, one line per vertex
BaseGraph parse_base_graph(std::string_view text);
std::string serialize_base_graph(const BaseGraph& base);

Problem parse_problem(std::string_view s);
Model parse_model(std::string_view s);

}  // namespace solrec

#pragma once

#include <cstdint>
#include <optional>

#include "solrec/instance.hpp"

namespace solrec {

inline constexpr std::uint64_t kDefaultGuardLimit = 10'000'000;

// kDefaultGuardLimit unless SOLREC_GUARD_LIMIT holds a positive integer.
std::uint64_t default_guard_limit();

struct OracleOptions {
    std::uint64_t guard_limit = default_guard_limit();
    std::optional<int> budget;  // overrides the instance budget
};

// Number of configurations the search could visit: C(n,k) for slide/jump,
// the sizes within b of k for add/remove, colors^n for colorings.
double configuration_space_size(const SubsetInstance& inst);
double configuration_space_size(const ColoringInstance& inst);

// Breadth-first search over configurations. Exact minimum and a certificate
// when the answer is yes. Throws StateSpaceTooLarge once the number of
// visited states exceeds the guard limit.
SolveResult oracle_solve(const SubsetInstance& inst, const OracleOptions& opts = {});
SolveResult oracle_solve(const ColoringInstance& inst, const OracleOptions& opts = {});
SolveResult oracle_solve(const Instance& inst, const OracleOptions& opts = {});

struct ReachResult {
    int moves = 0;
    MoveSequence certificate;
    std::uint64_t explored = 0;
};

// Minimum number of slides turning `start` into exactly `target`. Throws
// UnreachableTarget when some component holds different token counts.
ReachResult oracle_reach_target(const Graph& g, const TokenConfig& start,
                                const TokenConfig& target, const OracleOptions& opts = {});

}  // namespace solrec

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solrec/instance.hpp"

namespace solrec {

enum class FamilyKind { MinimalVertexCovers, CoveringFamily, MinimalDominatingSets };

struct Provenance {
    enum class Kind { Exhaustive, Branching, MonteCarlo };
    Kind kind = Kind::Exhaustive;
    int trials = 0;              // Monte Carlo only
    double failure_prob = 0.0;   // Monte Carlo only
};

struct CandidateFamily {
    FamilyKind kind = FamilyKind::MinimalVertexCovers;
    Provenance provenance;
    std::vector<std::vector<Vertex>> members;  // each sorted; list sorted
};

// Every minimal vertex cover of size <= k, via the two-way edge branching.
CandidateFamily enumerate_minimal_vertex_covers(const Graph& g, int k);

enum class CoverProvider { Exhaustive, DegenerateSampler };

struct CoverOptions {
    CoverProvider provider = CoverProvider::Exhaustive;
    int exhaustive_limit = 25;
    double failure_probability = 0.01;
    std::uint64_t seed = 1;
    std::optional<int> trials;  // overrides the count derived from failure_probability
    int trial_limit = 2'000'000;  // larger sampler runs throw ExhaustiveLimitExceeded
};

// Trials needed so that a fixed independent set of size k escapes all samples
// with probability at most delta, on a d-degenerate graph.
int sampler_trials(int k, int degeneracy, double delta);

// Exhaustive: all maximal independent sets (throws ExhaustiveLimitExceeded
// above the vertex limit). Sampler: independent sets from random degeneracy-
// guided samples, each extended greedily to a maximal one; throws
// ExhaustiveLimitExceeded when the trial count exceeds opts.trial_limit.
CandidateFamily build_covering_family(const Graph& g, int k, const CoverOptions& opts = {});

struct ProjectionClasses {
    std::vector<Vertex> core;
    std::vector<std::vector<Vertex>> classes;  // partition of V \ core
};

ProjectionClasses projection_classes(const Graph& g, const std::vector<Vertex>& core);

// Every minimal dominating set of size <= k, branching over N[u] for the
// lowest undominated u.
CandidateFamily enumerate_minimal_dominating_sets(const Graph& g, int k);

SolveResult solve_vcd_fpt(const SubsetInstance& inst);
SolveResult solve_isd_covering(const SubsetInstance& inst, const CoverOptions& opts = {});

// Without a core the trivial core V(G) is used and the result is exact. A
// caller-supplied core must be a k-domination core; the answer is then sound
// (certificates always verify) but minimality is only guaranteed for V(G).
SolveResult solve_dsd_core(const SubsetInstance& inst,
                           const std::optional<std::vector<Vertex>>& core = std::nullopt);

}  // namespace solrec

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solrec/instance.hpp"
#include "solrec/oracle.hpp"
#include "solrec/tree_decomposition.hpp"

namespace solrec {

struct SolveOptions {
    std::string solver = "auto";
    std::optional<std::int64_t> budget_override;
    std::uint64_t seed = 1;
    std::uint64_t guard_limit = default_guard_limit();
    std::optional<TreeDecomposition> decomposition;  // tw-dp only
};

enum class Answer { Yes, No, Guarded };

const char* to_string(Answer a);

struct SolveReport {
    Answer answer = Answer::No;
    std::optional<int> min_budget;
    std::string solver;  // the solver that ran, after resolving "auto"
    std::optional<MoveSequence> certificate;
    double wall_ms = 0;
    std::uint64_t hash = 0;
    std::uint64_t explored = 0;
    std::string note;
};

// Accepted --solver values, "auto" first.
const std::vector<std::string>& solver_names();

// Solver chosen by "auto": the k=2 coloring solvers, the specialized token
// sliding solver of the problem, cd-bounded for other colorings, else oracle.
std::string auto_solver(const Instance& inst);

// Applies the budget override, runs the solver and times it. Guards become
// Answer::Guarded; SolverInapplicable and input errors propagate.
SolveReport run_solver(const Instance& inst, const SolveOptions& opts);

std::string format_report(const SolveReport& r, bool json);

struct Verdict {
    enum class Reason { None, IllegalMove, BudgetExceeded, Infeasible };
    Reason reason = Reason::None;
    int failed_index = -1;
    std::string message;
    bool accepted() const { return reason == Reason::None; }
};

// Accepts iff every move is legal, the move count is at most the budget and
// the final state is a solution, checked in that order.
Verdict verify_certificate(const Instance& inst, std::span<const Move> moves);

struct BenchCell {
    std::string status;  // yes, no, guarded, n/a or error
    std::optional<int> min_budget;
    double wall_ms = 0;
};

struct BenchRow {
    std::string name;
    std::uint64_t hash = 0;
    std::vector<BenchCell> cells;  // one per solver
    bool disagreement = false;
};

struct BenchResult {
    std::vector<std::string> solvers;
    std::vector<BenchRow> rows;
    int disagreements = 0;
};

struct BenchInput {
    std::string name;
    std::string text;
};

// Solves every instance with every solver on a pool of `jobs` threads. A row
// disagrees when two solvers that both finished give different answers.
BenchResult run_bench(const std::vector<BenchInput>& corpus, const std::vector<std::string>& solvers,
                      const SolveOptions& base, int jobs);

// Every regular file in `dir`, sorted by name.
std::vector<BenchInput> read_corpus(const std::string& dir);

std::string format_bench(const BenchResult& b, bool json);

}  // namespace solrec

#include "solrec/solrec.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "solrec/driver.hpp"
#include "solrec/errors.hpp"
#include "solrec/io.hpp"
#include "solrec/reductions.hpp"
#include "solrec/tree_decomposition.hpp"

struct solrec_instance {
    solrec::Instance value;
};

struct solrec_report {
    solrec::SolveReport value;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

solrec_status fail(solrec_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs f and maps library exceptions onto status codes.
template <class F>
solrec_status guarded(F&& f) {
    using namespace solrec;
    try {
        f();
        last_error.clear();
        return SOLREC_OK;
    } catch (const ParseError& e) {
        return fail(SOLREC_ERR_PARSE, e.what());
    } catch (const IllegalMove& e) {
        return fail(SOLREC_ERR_ILLEGAL_MOVE, e.what());
    } catch (const StateSpaceTooLarge& e) {
        return fail(SOLREC_ERR_STATE_SPACE, e.what());
    } catch (const ExactLimitExceeded& e) {
        return fail(SOLREC_ERR_EXACT_LIMIT, e.what());
    } catch (const ExhaustiveLimitExceeded& e) {
        return fail(SOLREC_ERR_EXHAUSTIVE_LIMIT, e.what());
    } catch (const UnreachableTarget& e) {
        return fail(SOLREC_ERR_UNREACHABLE, e.what());
    } catch (const SolverInapplicable& e) {
        return fail(SOLREC_ERR_INAPPLICABLE, e.what());
    } catch (const InvalidDecomposition& e) {
        return fail(SOLREC_ERR_DECOMPOSITION, e.what());
    } catch (const PartitionInvalid& e) {
        return fail(SOLREC_ERR_PARTITION, e.what());
    } catch (const ImproperPrecoloring& e) {
        return fail(SOLREC_ERR_PRECOLORING, e.what());
    } catch (const EmptyList& e) {
        return fail(SOLREC_ERR_EMPTY_LIST, e.what());
    } catch (const InvalidArgument& e) {
        return fail(SOLREC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SOLREC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SOLREC_ERR_INTERNAL, "unknown failure");
    }
}

solrec::SolveOptions convert(const solrec_solve_options* opts) {
    solrec::SolveOptions o;
    if (!opts) return o;
    if (opts->solver) o.solver = opts->solver;
    if (opts->has_budget_override) o.budget_override = opts->budget_override;
    o.seed = opts->seed;
    if (opts->guard_limit) o.guard_limit = opts->guard_limit;
    if (opts->decomposition) o.decomposition = solrec::parse_tree_decomposition(opts->decomposition);
    return o;
}

bool known_solver(const std::string& s) {
    for (const auto& n : solrec::solver_names())
        if (n == s) return true;
    return false;
}

}  // namespace

extern "C" {

const char* solrec_last_error(void) { return last_error.c_str(); }

const char* solrec_status_name(solrec_status status) {
    switch (status) {
        case SOLREC_OK: return "ok";
        case SOLREC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SOLREC_ERR_PARSE: return "parse error";
        case SOLREC_ERR_ILLEGAL_MOVE: return "illegal move";
        case SOLREC_ERR_STATE_SPACE: return "state space too large";
        case SOLREC_ERR_EXACT_LIMIT: return "exact limit exceeded";
        case SOLREC_ERR_EXHAUSTIVE_LIMIT: return "exhaustive limit exceeded";
        case SOLREC_ERR_UNREACHABLE: return "unreachable target";
        case SOLREC_ERR_INAPPLICABLE: return "solver inapplicable";
        case SOLREC_ERR_DECOMPOSITION: return "invalid decomposition";
        case SOLREC_ERR_PARTITION: return "invalid partition";
        case SOLREC_ERR_PRECOLORING: return "improper precoloring";
        case SOLREC_ERR_EMPTY_LIST: return "empty color list";
        case SOLREC_ERR_IO: return "i/o error";
        case SOLREC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void solrec_string_free(char* s) { std::free(s); }

void solrec_solve_options_init(solrec_solve_options* opts) {
    if (!opts) return;
    opts->solver = nullptr;
    opts->has_budget_override = 0;
    opts->budget_override = 0;
    opts->seed = 1;
    opts->guard_limit = 0;
    opts->decomposition = nullptr;
}

solrec_status solrec_instance_parse(const char* text, solrec_instance** out) {
    if (!text || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new solrec_instance{solrec::parse_instance(text)}; });
}

void solrec_instance_free(solrec_instance* inst) { delete inst; }

solrec_status solrec_instance_serialize(const solrec_instance* inst, solrec_format format,
                                        char** out) {
    if (!inst || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup(format == SOLREC_FORMAT_JSON ? solrec::instance_to_json(inst->value) + "\n"
                                                : solrec::serialize_instance(inst->value));
    });
}

solrec_status solrec_instance_hash(const solrec_instance* inst, uint64_t* out) {
    if (!inst || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = solrec::instance_hash(inst->value); });
}

solrec_status solrec_solve(const solrec_instance* inst, const solrec_solve_options* opts,
                           solrec_report** out) {
    if (!inst || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        solrec::SolveOptions o = convert(opts);
        if (!known_solver(o.solver))
            throw solrec::InvalidArgument("unknown solver '" + o.solver + "'");
        *out = new solrec_report{solrec::run_solver(inst->value, o)};
    });
}

void solrec_report_free(solrec_report* report) { delete report; }

solrec_answer solrec_report_answer(const solrec_report* report) {
    switch (report->value.answer) {
        case solrec::Answer::Yes: return SOLREC_ANSWER_YES;
        case solrec::Answer::No: return SOLREC_ANSWER_NO;
        default: return SOLREC_ANSWER_GUARDED;
    }
}

int solrec_report_min_budget(const solrec_report* report) {
    return report->value.min_budget.value_or(-1);
}

int solrec_report_has_certificate(const solrec_report* report) {
    return report->value.certificate.has_value();
}

solrec_status solrec_report_format(const solrec_report* report, solrec_format format, char** out) {
    if (!report || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = dup(solrec::format_report(report->value, format == SOLREC_FORMAT_JSON)); });
}

solrec_status solrec_report_certificate(const solrec_report* report, char** out) {
    if (!report || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    if (!report->value.certificate) return fail(SOLREC_ERR_INVALID_ARGUMENT, "no certificate");
    return guarded([&] { *out = dup(solrec::serialize_certificate(*report->value.certificate)); });
}

solrec_status solrec_verify(const solrec_instance* inst, const char* certificate, int* accepted,
                            char** reason) {
    if (!inst || !certificate || !accepted) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto moves = solrec::parse_certificate(certificate);
        auto v = solrec::verify_certificate(inst->value, moves);
        *accepted = v.accepted();
        if (reason) *reason = dup(v.message);
    });
}

solrec_status solrec_generator_list(char** out) {
    if (!out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string s;
        for (const auto& g : solrec::generators()) s += std::string(g.name) + "\n";
        *out = dup(s);
    });
}

solrec_status solrec_generate(const char* generator, const char* base, int param,
                              const char* model, solrec_instance** out, char** names) {
    if (!generator || !base || !out) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        solrec::Model m = model ? solrec::parse_model(model) : solrec::Model::ColorSlide;
        solrec::ReductionOutput r;
        if (std::string(generator) == "vcd_to_dsd") {
            auto inst = solrec::parse_instance(base);
            auto* s = std::get_if<solrec::SubsetInstance>(&inst);
            if (!s) throw solrec::InvalidArgument("vcd_to_dsd needs a vertex cover instance");
            r = solrec::generate(generator, solrec::BaseGraph(s->graph), param, m, s);
        } else {
            r = solrec::generate(generator, solrec::parse_base_graph(base), param, m);
        }
        if (names) {
            std::ostringstream s;
            for (std::size_t i = 0; i < r.names.size(); ++i) s << i << ' ' << r.names[i] << '\n';
            *names = dup(s.str());
        }
        *out = new solrec_instance{std::move(r.instance)};
    });
}

solrec_status solrec_decompose(const char* text, int exact, char** td, int* width) {
    if (!text || !td) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        solrec::Graph g;
        try {
            auto inst = solrec::parse_instance(text);
            g = std::visit([](const auto& i) { return i.graph; }, inst);
        } catch (const solrec::ParseError&) {
            g = solrec::parse_base_graph(text).graph;
        }
        auto order = exact ? solrec::exact_treewidth_ordering(g) : solrec::min_fill_ordering(g);
        auto d = solrec::decomposition_from_ordering(g, order);
        solrec::validate(g, d);
        *td = dup(solrec::serialize_tree_decomposition(d, g.num_vertices()));
        if (width) *width = d.width();
    });
}

solrec_status solrec_bench(const char* corpus_dir, const char* solvers,
                           const solrec_solve_options* opts, int jobs, solrec_format format,
                           char** table, int* disagreements) {
    if (!corpus_dir || !solvers || !table) return fail(SOLREC_ERR_INVALID_ARGUMENT, "null argument");
    std::vector<solrec::BenchInput> corpus;
    try {
        corpus = solrec::read_corpus(corpus_dir);
    } catch (const std::exception& e) {
        return fail(SOLREC_ERR_IO, e.what());
    }
    return guarded([&] {
        std::vector<std::string> list;
        std::stringstream ss(solvers);
        for (std::string s; std::getline(ss, s, ',');) {
            if (s.empty()) continue;
            if (!known_solver(s)) throw solrec::InvalidArgument("unknown solver '" + s + "'");
            list.push_back(s);
        }
        if (list.empty()) throw solrec::InvalidArgument("no solvers given");
        auto result = solrec::run_bench(corpus, list, convert(opts), jobs);
        *table = dup(solrec::format_bench(result, format == SOLREC_FORMAT_JSON));
        if (disagreements) *disagreements = result.disagreements;
    });
}

}  // extern "C"

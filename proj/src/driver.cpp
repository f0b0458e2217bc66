#include "solrec/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "solrec/coloring_solvers.hpp"
#include "solrec/errors.hpp"
#include "solrec/io.hpp"
#include "solrec/oracle.hpp"
#include "solrec/subset_solvers.hpp"
#include "solrec/treewidth_dp.hpp"

namespace solrec {

const char* to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        case Answer::Guarded: return "guarded";
    }
    return "?";
}

const std::vector<std::string>& solver_names() {
    static const std::vector<std::string> names = {
        "auto",  "oracle",     "vcd-fpt",    "isd-cover",   "dsd-core",
        "tw-dp", "cd-k2-flip", "cd-k2-swap", "cd-k2-slide", "cd-bounded",
    };
    return names;
}

std::string auto_solver(const Instance& inst) {
    if (auto* c = std::get_if<ColoringInstance>(&inst)) {
        if (c->colors == 2) {
            switch (c->model) {
                case Model::Flip: return "cd-k2-flip";
                case Model::Swap: return "cd-k2-swap";
                default: return "cd-k2-slide";
            }
        }
        return "cd-bounded";
    }
    const auto& s = std::get<SubsetInstance>(inst);
    if (s.model != Model::Slide) return "oracle";
    switch (s.problem) {
        case Problem::VertexCover: return "vcd-fpt";
        case Problem::IndependentSet: return "isd-cover";
        default: return "dsd-core";
    }
}

namespace {

Instance with_budget(const Instance& inst, std::int64_t budget) {
    if (auto* s = std::get_if<SubsetInstance>(&inst))
        return make_subset_instance(s->problem, s->model, s->graph, s->start, budget);
    const auto& c = std::get<ColoringInstance>(inst);
    return make_coloring_instance(c.model, c.graph, c.coloring, c.colors, budget);
}

const SubsetInstance& as_subset(const Instance& inst, const std::string& solver) {
    if (auto* s = std::get_if<SubsetInstance>(&inst)) return *s;
    throw SolverInapplicable(solver + " needs a vertex subset instance");
}

const ColoringInstance& as_coloring(const Instance& inst, const std::string& solver) {
    if (auto* c = std::get_if<ColoringInstance>(&inst)) return *c;
    throw SolverInapplicable(solver + " needs a coloring instance");
}

SolveResult dispatch(const Instance& inst, const std::string& name, const SolveOptions& opts,
                     std::string& note) {
    OracleOptions oracle;
    oracle.guard_limit = opts.guard_limit;
    if (name == "oracle") return oracle_solve(inst, oracle);
    if (name == "vcd-fpt") return solve_vcd_fpt(as_subset(inst, name));
    if (name == "isd-cover") {
        const auto& s = as_subset(inst, name);
        CoverOptions cover;
        cover.seed = opts.seed;
        if (s.graph.num_vertices() > cover.exhaustive_limit) {
            cover.provider = CoverProvider::DegenerateSampler;
            note = "sampled covering family; a no answer holds with probability >= " +
                   std::to_string(1 - cover.failure_probability);
        }
        return solve_isd_covering(s, cover);
    }
    if (name == "dsd-core") return solve_dsd_core(as_subset(inst, name));
    if (name == "tw-dp") {
        const auto& s = as_subset(inst, name);
        std::optional<NiceTreeDecomposition> ntd;
        if (opts.decomposition) ntd = make_nice(*opts.decomposition);
        SolveResult r = solve_discovery_tw(s, ntd);
        if (r.yes) {
            // The program decides only; ask the oracle for a schedule of the same length.
            OracleOptions o = oracle;
            o.budget = r.min_moves;
            try {
                SolveResult cert = oracle_solve(s, o);
                if (cert.yes) r.certificate = cert.certificate;
            } catch (const StateSpaceTooLarge&) {
                note = "certificate unavailable: configuration space above the guard limit";
            }
        }
        return r;
    }
    if (name == "cd-k2-flip") return solve_cd_flip_k2(as_coloring(inst, name));
    if (name == "cd-k2-swap") return solve_cd_swap_k2(as_coloring(inst, name));
    if (name == "cd-k2-slide") return solve_cd_slide_k2(as_coloring(inst, name));
    if (name == "cd-bounded") return solve_cd_bounded(as_coloring(inst, name), oracle);
    throw InvalidArgument("unknown solver '" + name + "'");
}

}  // namespace

SolveReport run_solver(const Instance& input, const SolveOptions& opts) {
    const Instance inst = opts.budget_override ? with_budget(input, *opts.budget_override) : input;
    SolveReport rep;
    rep.solver = opts.solver == "auto" ? auto_solver(inst) : opts.solver;
    rep.hash = instance_hash(inst);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        SolveResult r = dispatch(inst, rep.solver, opts, rep.note);
        rep.answer = r.yes ? Answer::Yes : Answer::No;
        if (r.yes) rep.min_budget = r.min_moves;
        rep.certificate = std::move(r.certificate);
        rep.explored = r.explored;
    } catch (const StateSpaceTooLarge& e) {
        rep.answer = Answer::Guarded;
        rep.note = e.what();
    } catch (const ExactLimitExceeded& e) {
        rep.answer = Answer::Guarded;
        rep.note = e.what();
    } catch (const ExhaustiveLimitExceeded& e) {
        rep.answer = Answer::Guarded;
        rep.note = e.what();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

std::string format_report(const SolveReport& r, bool json) {
    if (json) {
        nlohmann::json j;
        j["answer"] = to_string(r.answer);
        j["min_budget"] = r.min_budget ? nlohmann::json(*r.min_budget) : nlohmann::json(nullptr);
        j["solver"] = r.solver;
        j["certificate"] = r.certificate ? nlohmann::json(r.certificate->size()) : nlohmann::json(nullptr);
        j["wall_ms"] = r.wall_ms;
        j["hash"] = hash_hex(r.hash);
        j["explored"] = r.explored;
        if (!r.note.empty()) j["note"] = r.note;
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "answer " << to_string(r.answer) << '\n';
    if (r.min_budget) out << "min_budget " << *r.min_budget << '\n';
    out << "solver " << r.solver << '\n';
    if (r.certificate) out << "certificate " << r.certificate->size() << " moves\n";
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << "wall_ms " << ms << '\n'
        << "hash " << hash_hex(r.hash) << '\n'
        << "explored " << r.explored << '\n';
    if (!r.note.empty()) out << "note " << r.note << '\n';
    return out.str();
}

Verdict verify_certificate(const Instance& inst, std::span<const Move> moves) {
    Verdict v;
    ReplayResult rr = replay(inst, moves);
    if (!rr.legal) {
        v.reason = Verdict::Reason::IllegalMove;
        v.failed_index = rr.failed_index;
        v.message = "illegal move at index " + std::to_string(rr.failed_index) + ": " + rr.reason;
        return v;
    }
    const int budget = std::visit([](const auto& i) { return i.budget; }, inst);
    if (rr.cost > budget) {
        v.reason = Verdict::Reason::BudgetExceeded;
        v.message = "budget exceeded: " + std::to_string(rr.cost) + " moves > " +
                    std::to_string(budget);
        return v;
    }
    bool ok = false;
    if (auto* s = std::get_if<SubsetInstance>(&inst))
        ok = is_solution(*s, std::get<TokenConfig>(rr.final_state));
    else
        ok = is_solution(std::get<ColoringInstance>(inst), std::get<Coloring>(rr.final_state));
    if (!ok) {
        v.reason = Verdict::Reason::Infeasible;
        v.message = "final state infeasible";
    }
    return v;
}

BenchResult run_bench(const std::vector<BenchInput>& corpus, const std::vector<std::string>& solvers,
                      const SolveOptions& base, int jobs) {
    BenchResult out;
    out.solvers = solvers;
    out.rows.resize(corpus.size());
    const std::size_t tasks = corpus.size();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks;) {
            BenchRow& row = out.rows[i];
            row.name = corpus[i].name;
            Instance inst = parse_instance(corpus[i].text);
            row.hash = instance_hash(inst);
            for (const std::string& s : solvers) {
                BenchCell cell;
                SolveOptions o = base;
                o.solver = s;
                try {
                    SolveReport r = run_solver(inst, o);
                    cell.status = to_string(r.answer);
                    cell.min_budget = r.min_budget;
                    cell.wall_ms = r.wall_ms;
                } catch (const SolverInapplicable&) {
                    cell.status = "n/a";
                } catch (const std::exception&) {
                    cell.status = "error";
                }
                row.cells.push_back(cell);
            }
        }
    };
    // Parse errors surface before any work starts.
    for (const auto& in : corpus) parse_instance(in.text);
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(tasks, 1))));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (BenchRow& row : out.rows) {
        std::optional<std::string> seen;
        for (const BenchCell& c : row.cells) {
            if (c.status != "yes" && c.status != "no") continue;
            if (seen && *seen != c.status) row.disagreement = true;
            seen = c.status;
        }
        out.disagreements += row.disagreement;
    }
    return out;
}

std::vector<BenchInput> read_corpus(const std::string& dir) {
    std::vector<BenchInput> out;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        out.push_back({p.filename().string(), text.str()});
    }
    return out;
}

std::string format_bench(const BenchResult& b, bool json) {
    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : b.rows) {
            nlohmann::json cells = nlohmann::json::object();
            for (std::size_t i = 0; i < b.solvers.size(); ++i) {
                const auto& c = r.cells[i];
                cells[b.solvers[i]] = {
                    {"status", c.status},
                    {"min_budget", c.min_budget ? nlohmann::json(*c.min_budget) : nlohmann::json(nullptr)},
                    {"wall_ms", c.wall_ms}};
            }
            rows.push_back({{"name", r.name}, {"hash", hash_hex(r.hash)}, {"results", cells},
                            {"disagreement", r.disagreement}});
        }
        return nlohmann::json{{"solvers", b.solvers}, {"rows", rows},
                              {"disagreements", b.disagreements}}
                   .dump() +
               "\n";
    }
    std::ostringstream out;
    out << "instance\thash";
    for (const auto& s : b.solvers) out << '\t' << s;
    out << '\n';
    for (const auto& r : b.rows) {
        out << r.name << '\t' << hash_hex(r.hash);
        for (const auto& c : r.cells) {
            out << '\t' << c.status;
            if (c.min_budget) out << '(' << *c.min_budget << ')';
            char ms[32];
            std::snprintf(ms, sizeof ms, " %.1fms", c.wall_ms);
            if (c.status != "n/a") out << ms;
        }
        out << '\n';
    }
    for (const auto& r : b.rows)
        if (r.disagreement) out << "disagreement " << hash_hex(r.hash) << ' ' << r.name << '\n';
    out << "disagreements " << b.disagreements << '\n';
    return out.str();
}

}  // namespace solrec

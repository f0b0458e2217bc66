// Command line front end. Talks to the library only through solrec.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "solrec/solrec.h"

namespace {

// Exit statuses: 0 yes, 1 no, 2 guarded, 2 + status code for errors.
int error_exit(solrec_status s) {
    std::cerr << "error: " << solrec_status_name(s) << ": " << solrec_last_error() << '\n';
    return 2 + static_cast<int>(s);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << '\n';
        return false;
    }
    std::ostringstream s;
    s << in.rdbuf();
    out = s.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return false;
    }
    out << text;
    return true;
}

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    solrec_string_free(s);
    return out;
}

struct Instance {
    solrec_instance* ptr = nullptr;
    ~Instance() { solrec_instance_free(ptr); }
};

struct Report {
    solrec_report* ptr = nullptr;
    ~Report() { solrec_report_free(ptr); }
};

struct SolveFlags {
    std::string solver = "auto";
    long long budget = -1;
    unsigned long long seed = 1;
    unsigned long long guard = 0;
    std::string format = "text";
    std::string certificate_out;
    std::string td_file;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f, bool with_solver) {
    if (with_solver) cmd->add_option("--solver", f.solver, "Solver selector")->capture_default_str();
    cmd->add_option("--budget-override", f.budget, "Replace the instance budget");
    cmd->add_option("--seed", f.seed, "Seed for randomized solvers")->capture_default_str();
    cmd->add_option("--guard-limit", f.guard,
                    "Maximum configurations the oracle may visit (default from SOLREC_GUARD_LIMIT)");
    cmd->add_option("--format", f.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

solrec_format format_of(const std::string& f) {
    return f == "json" ? SOLREC_FORMAT_JSON : SOLREC_FORMAT_TEXT;
}

int run_solve(const std::string& path, const SolveFlags& f) {
    std::string text, td;
    if (!read_file(path, text)) return 2 + SOLREC_ERR_IO;
    if (!f.td_file.empty() && !read_file(f.td_file, td)) return 2 + SOLREC_ERR_IO;
    Instance inst;
    if (auto s = solrec_instance_parse(text.c_str(), &inst.ptr)) return error_exit(s);
    solrec_solve_options opts;
    solrec_solve_options_init(&opts);
    opts.solver = f.solver.c_str();
    if (f.budget >= 0) {
        opts.has_budget_override = 1;
        opts.budget_override = f.budget;
    }
    opts.seed = f.seed;
    opts.guard_limit = f.guard;
    if (!td.empty()) opts.decomposition = td.c_str();
    Report rep;
    if (auto s = solrec_solve(inst.ptr, &opts, &rep.ptr)) return error_exit(s);
    char* out = nullptr;
    if (auto s = solrec_report_format(rep.ptr, format_of(f.format), &out)) return error_exit(s);
    std::cout << take(out);
    if (!f.certificate_out.empty() && solrec_report_has_certificate(rep.ptr)) {
        char* cert = nullptr;
        if (auto s = solrec_report_certificate(rep.ptr, &cert)) return error_exit(s);
        if (!write_file(f.certificate_out, take(cert))) return 2 + SOLREC_ERR_IO;
    }
    switch (solrec_report_answer(rep.ptr)) {
        case SOLREC_ANSWER_YES: return 0;
        case SOLREC_ANSWER_NO: return 1;
        default: return 2;
    }
}

int run_verify(const std::string& inst_path, const std::string& cert_path) {
    std::string text, cert;
    if (!read_file(inst_path, text) || !read_file(cert_path, cert)) return 2 + SOLREC_ERR_IO;
    Instance inst;
    if (auto s = solrec_instance_parse(text.c_str(), &inst.ptr)) return error_exit(s);
    int accepted = 0;
    char* reason = nullptr;
    if (auto s = solrec_verify(inst.ptr, cert.c_str(), &accepted, &reason)) return error_exit(s);
    std::string why = take(reason);
    if (accepted) {
        std::cout << "accept\n";
        return 0;
    }
    std::cout << "reject: " << why << '\n';
    return 1;
}

int run_gen(const std::string& generator, const std::string& base_path, int param,
            const std::string& model, const std::string& out_path, const std::string& names_path,
            const std::string& format) {
    std::string base;
    if (!read_file(base_path, base)) return 2 + SOLREC_ERR_IO;
    Instance inst;
    char* names = nullptr;
    if (auto s = solrec_generate(generator.c_str(), base.c_str(), param,
                                 model.empty() ? nullptr : model.c_str(), &inst.ptr,
                                 names_path.empty() ? nullptr : &names))
        return error_exit(s);
    char* text = nullptr;
    if (auto s = solrec_instance_serialize(inst.ptr, format_of(format), &text)) return error_exit(s);
    if (!write_file(out_path, take(text))) return 2 + SOLREC_ERR_IO;
    if (!names_path.empty() && !write_file(names_path, take(names))) return 2 + SOLREC_ERR_IO;
    return 0;
}

int run_bench(const std::string& dir, const std::string& solvers, const SolveFlags& f, int jobs) {
    solrec_solve_options opts;
    solrec_solve_options_init(&opts);
    opts.seed = f.seed;
    opts.guard_limit = f.guard;
    if (f.budget >= 0) {
        opts.has_budget_override = 1;
        opts.budget_override = f.budget;
    }
    char* table = nullptr;
    int disagreements = 0;
    if (auto s = solrec_bench(dir.c_str(), solvers.c_str(), &opts, jobs, format_of(f.format), &table,
                              &disagreements))
        return error_exit(s);
    std::cout << take(table);
    return disagreements ? 1 : 0;
}

int run_decomp(const std::string& path, bool exact) {
    std::string text;
    if (!read_file(path, text)) return 2 + SOLREC_ERR_IO;
    char* td = nullptr;
    int width = 0;
    if (auto s = solrec_decompose(text.c_str(), exact, &td, &width)) return error_exit(s);
    std::cout << "c width " << width << '\n' << take(td);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solution discovery solvers for graph problems"};
    app.require_subcommand(1);

    SolveFlags solve_flags, oracle_flags, bench_flags;
    std::string solve_file, oracle_file;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("instance", solve_file, "Instance file")->required();
    add_solve_flags(solve, solve_flags, true);
    solve->add_option("--certificate", solve_flags.certificate_out, "Write the certificate here");
    solve->add_option("--td", solve_flags.td_file, "PACE tree decomposition for tw-dp");

    auto* oracle = app.add_subcommand("oracle", "Solve by exhaustive breadth-first search");
    oracle->add_option("instance", oracle_file, "Instance file")->required();
    add_solve_flags(oracle, oracle_flags, false);
    oracle->add_option("--certificate", oracle_flags.certificate_out, "Write the certificate here");

    std::string verify_inst, verify_cert;
    auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
    verify->add_option("instance", verify_inst, "Instance file")->required();
    verify->add_option("certificate", verify_cert, "Certificate file")->required();

    std::string gen_name, gen_base, gen_model, gen_out = "-", gen_names, gen_format = "text";
    int gen_param = 0;
    auto* gen = app.add_subcommand("gen", "Build a gadget instance from a base file");
    gen->add_option("generator", gen_name, "Generator name (see --list)");
    gen->add_option("base", gen_base, "Base graph file, or an instance file for vcd_to_dsd");
    gen->add_option("--param", gen_param, "kappa, k or r depending on the generator");
    gen->add_option("--model", gen_model, "Coloring model for likc_to_cd");
    gen->add_option("-o,--out", gen_out, "Output file")->capture_default_str();
    gen->add_option("--names", gen_names, "Write gadget vertex names here");
    gen->add_option("--format", gen_format, "Instance encoding")
        ->check(CLI::IsMember({"text", "json"}));
    bool gen_list = false;
    gen->add_flag("--list", gen_list, "List generators");

    std::string bench_dir, bench_solvers = "oracle,auto";
    int bench_jobs = 1;
    auto* bench = app.add_subcommand("bench", "Run solvers over a corpus and compare answers");
    bench->add_option("corpus", bench_dir, "Directory of instance files")->required();
    bench->add_option("--solvers", bench_solvers, "Comma separated solvers")->capture_default_str();
    bench->add_option("-j,--jobs", bench_jobs, "Worker threads")->capture_default_str();
    add_solve_flags(bench, bench_flags, false);

    std::string decomp_file;
    bool decomp_exact = false;
    auto* decomp = app.add_subcommand("decomp", "Tree decomposition in PACE format");
    decomp->add_option("file", decomp_file, "Instance or base graph file")->required();
    decomp->add_flag("--exact", decomp_exact, "Optimal width (small graphs only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2 + SOLREC_ERR_INVALID_ARGUMENT;
    }

    if (*solve) return run_solve(solve_file, solve_flags);
    if (*oracle) {
        oracle_flags.solver = "oracle";
        return run_solve(oracle_file, oracle_flags);
    }
    if (*verify) return run_verify(verify_inst, verify_cert);
    if (*gen) {
        if (gen_list) {
            char* list = nullptr;
            if (auto s = solrec_generator_list(&list)) return error_exit(s);
            std::cout << take(list);
            return 0;
        }
        if (gen_name.empty() || gen_base.empty()) {
            std::cerr << "error: gen needs a generator and a base file\n";
            return 2 + SOLREC_ERR_INVALID_ARGUMENT;
        }
        return run_gen(gen_name, gen_base, gen_param, gen_model, gen_out, gen_names, gen_format);
    }
    if (*bench) return run_bench(bench_dir, bench_solvers, bench_flags, bench_jobs);
    if (*decomp) return run_decomp(decomp_file, decomp_exact);
    return 2 + SOLREC_ERR_INVALID_ARGUMENT;
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "solrec/solrec.h"

namespace {

const char* kP3 =
    "problem vc\nmodel slide\nbudget 1\ngraph 3 2\n0 1\n1 2\ntokens 0\n";

std::string take(char* s) {
    std::string out = s ? s : "";
    solrec_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse, solve, certify and verify") {
    solrec_instance* inst = nullptr;
    REQUIRE(solrec_instance_parse(kP3, &inst) == SOLREC_OK);
    uint64_t h = 0;
    CHECK(solrec_instance_hash(inst, &h) == SOLREC_OK);
    CHECK(h != 0);
    char* text = nullptr;
    REQUIRE(solrec_instance_serialize(inst, SOLREC_FORMAT_TEXT, &text) == SOLREC_OK);
    CHECK(take(text).find("problem vc") != std::string::npos);

    solrec_solve_options o;
    solrec_solve_options_init(&o);
    solrec_report* rep = nullptr;
    REQUIRE(solrec_solve(inst, &o, &rep) == SOLREC_OK);
    CHECK(solrec_report_answer(rep) == SOLREC_ANSWER_YES);
    CHECK(solrec_report_min_budget(rep) == 1);
    REQUIRE(solrec_report_has_certificate(rep));
    char* cert = nullptr;
    REQUIRE(solrec_report_certificate(rep, &cert) == SOLREC_OK);
    std::string c = take(cert);
    int accepted = 0;
    char* reason = nullptr;
    REQUIRE(solrec_verify(inst, c.c_str(), &accepted, &reason) == SOLREC_OK);
    CHECK(accepted == 1);
    CHECK(take(reason).empty());
    REQUIRE(solrec_verify(inst, "slide 1 2\n", &accepted, &reason) == SOLREC_OK);
    CHECK(accepted == 0);
    CHECK(take(reason).find("illegal move at index 0") == 0);
    char* fmt = nullptr;
    REQUIRE(solrec_report_format(rep, SOLREC_FORMAT_JSON, &fmt) == SOLREC_OK);
    CHECK(take(fmt).find("\"answer\":\"yes\"") != std::string::npos);
    solrec_report_free(rep);

    o.has_budget_override = 1;
    o.budget_override = 0;
    REQUIRE(solrec_solve(inst, &o, &rep) == SOLREC_OK);
    CHECK(solrec_report_answer(rep) == SOLREC_ANSWER_NO);
    CHECK(solrec_report_min_budget(rep) == -1);
    CHECK(solrec_report_certificate(rep, &cert) == SOLREC_ERR_INVALID_ARGUMENT);
    solrec_report_free(rep);
    solrec_instance_free(inst);
}

TEST_CASE("errors map onto status codes") {
    solrec_instance* inst = nullptr;
    CHECK(solrec_instance_parse("problem vc\nbogus\n", &inst) == SOLREC_ERR_PARSE);
    CHECK(std::string(solrec_last_error()).size() > 0);
    CHECK(solrec_instance_parse(nullptr, &inst) == SOLREC_ERR_INVALID_ARGUMENT);
    REQUIRE(solrec_instance_parse(kP3, &inst) == SOLREC_OK);
    CHECK(std::string(solrec_last_error()).empty());

    solrec_solve_options o;
    solrec_solve_options_init(&o);
    solrec_report* rep = nullptr;
    o.solver = "nonsense";
    CHECK(solrec_solve(inst, &o, &rep) == SOLREC_ERR_INVALID_ARGUMENT);
    o.solver = "cd-k2-flip";
    CHECK(solrec_solve(inst, &o, &rep) == SOLREC_ERR_INAPPLICABLE);
    o.solver = "tw-dp";
    o.decomposition = "s td 1 1 3\nb 1 1 2\n";
    CHECK(solrec_solve(inst, &o, &rep) == SOLREC_ERR_DECOMPOSITION);
    int accepted = 0;
    CHECK(solrec_verify(inst, "teleport 0 1\n", &accepted, nullptr) == SOLREC_ERR_PARSE);
    solrec_instance_free(inst);

    CHECK(std::string(solrec_status_name(SOLREC_ERR_STATE_SPACE)) == "state space too large");
    char* td = nullptr;
    int width = 0;
    CHECK(solrec_decompose("p x\n", 1, &td, &width) == SOLREC_ERR_PARSE);
}

TEST_CASE("generators and decompositions") {
    char* list = nullptr;
    REQUIRE(solrec_generator_list(&list) == SOLREC_OK);
    std::string l = take(list);
    CHECK(l.find("vc_to_vcd\n") != std::string::npos);
    CHECK(l.find("vcd_to_dsd\n") != std::string::npos);

    const char* base = "graph 3 2\n0 1\n1 2\n";
    solrec_instance* inst = nullptr;
    char* names = nullptr;
    REQUIRE(solrec_generate("vc_to_vcd", base, 1, nullptr, &inst, &names) == SOLREC_OK);
    std::string n = take(names);
    CHECK(n.find("3 0.x\n") != std::string::npos);
    solrec_solve_options o;
    solrec_solve_options_init(&o);
    solrec_report* rep = nullptr;
    REQUIRE(solrec_solve(inst, &o, &rep) == SOLREC_OK);
    CHECK(solrec_report_answer(rep) == SOLREC_ANSWER_YES);
    solrec_report_free(rep);
    solrec_instance_free(inst);
    CHECK(solrec_generate("nope", base, 1, nullptr, &inst, nullptr) == SOLREC_ERR_INVALID_ARGUMENT);

    char* td = nullptr;
    int width = -1;
    REQUIRE(solrec_decompose(base, 1, &td, &width) == SOLREC_OK);
    CHECK(width == 1);
    CHECK(take(td).find("s td") == 0);
    REQUIRE(solrec_decompose(kP3, 0, &td, &width) == SOLREC_OK);
    CHECK(width == 1);
    solrec_string_free(td);
}

TEST_CASE("bench through the C interface") {
    auto dir = std::filesystem::temp_directory_path() / "solrec_capi_bench";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "a.inst") << kP3;
    solrec_solve_options o;
    solrec_solve_options_init(&o);
    char* table = nullptr;
    int dis = -1;
    REQUIRE(solrec_bench(dir.string().c_str(), "oracle,auto,tw-dp", &o, 1, SOLREC_FORMAT_TEXT,
                         &table, &dis) == SOLREC_OK);
    CHECK(dis == 0);
    CHECK(take(table).find("disagreements 0") != std::string::npos);
    CHECK(solrec_bench(dir.string().c_str(), "oracle,what", &o, 1, SOLREC_FORMAT_TEXT, &table,
                       &dis) == SOLREC_ERR_INVALID_ARGUMENT);
    CHECK(solrec_bench((dir / "missing").string().c_str(), "oracle", &o, 1, SOLREC_FORMAT_TEXT,
                       &table, &dis) == SOLREC_ERR_IO);
    std::filesystem::remove_all(dir);
}

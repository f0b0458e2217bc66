#ifndef SOLREC_H
#define SOLREC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SOLREC_API __declspec(dllexport)
#else
#define SOLREC_API __attribute__((visibility("default")))
#endif

typedef enum solrec_status {
    SOLREC_OK = 0,
    SOLREC_ERR_INVALID_ARGUMENT = 1,
    SOLREC_ERR_PARSE = 2,
    SOLREC_ERR_ILLEGAL_MOVE = 3,
    SOLREC_ERR_STATE_SPACE = 4,
    SOLREC_ERR_EXACT_LIMIT = 5,
    SOLREC_ERR_EXHAUSTIVE_LIMIT = 6,
    SOLREC_ERR_UNREACHABLE = 7,
    SOLREC_ERR_INAPPLICABLE = 8,
    SOLREC_ERR_DECOMPOSITION = 9,
    SOLREC_ERR_PARTITION = 10,
    SOLREC_ERR_PRECOLORING = 11,
    SOLREC_ERR_EMPTY_LIST = 12,
    SOLREC_ERR_IO = 13,
    SOLREC_ERR_INTERNAL = 14
} solrec_status;

typedef enum solrec_answer {
    SOLREC_ANSWER_YES = 0,
    SOLREC_ANSWER_NO = 1,
    SOLREC_ANSWER_GUARDED = 2
} solrec_answer;

typedef enum solrec_format { SOLREC_FORMAT_TEXT = 0, SOLREC_FORMAT_JSON = 1 } solrec_format;

typedef struct solrec_instance solrec_instance;
typedef struct solrec_report solrec_report;

typedef struct solrec_solve_options {
    const char* solver;          /* NULL means "auto" */
    int has_budget_override;
    int64_t budget_override;
    uint64_t seed;
    uint64_t guard_limit;        /* 0 means the default guard limit */
    const char* decomposition;   /* PACE .td text for tw-dp, or NULL */
} solrec_solve_options;

/* Message of the last failure on the calling thread; never NULL. */
SOLREC_API const char* solrec_last_error(void);
SOLREC_API const char* solrec_status_name(solrec_status status);

/* Every char* handed out by the library is released with this. */
SOLREC_API void solrec_string_free(char* s);

SOLREC_API void solrec_solve_options_init(solrec_solve_options* opts);

SOLREC_API solrec_status solrec_instance_parse(const char* text, solrec_instance** out);
SOLREC_API void solrec_instance_free(solrec_instance* inst);
SOLREC_API solrec_status solrec_instance_serialize(const solrec_instance* inst, solrec_format format,
                                                   char** out);
SOLREC_API solrec_status solrec_instance_hash(const solrec_instance* inst, uint64_t* out);

SOLREC_API solrec_status solrec_solve(const solrec_instance* inst, const solrec_solve_options* opts,
                                      solrec_report** out);
SOLREC_API void solrec_report_free(solrec_report* report);
SOLREC_API solrec_answer solrec_report_answer(const solrec_report* report);
/* -1 when the report carries no minimum. */
SOLREC_API int solrec_report_min_budget(const solrec_report* report);
SOLREC_API int solrec_report_has_certificate(const solrec_report* report);
SOLREC_API solrec_status solrec_report_format(const solrec_report* report, solrec_format format,
                                              char** out);
/* Fails with SOLREC_ERR_INVALID_ARGUMENT when no certificate is present. */
SOLREC_API solrec_status solrec_report_certificate(const solrec_report* report, char** out);

/* accepted is set to 1 or 0; reason receives the rejection message (empty on accept). */
SOLREC_API solrec_status solrec_verify(const solrec_instance* inst, const char* certificate,
                                       int* accepted, char** reason);

/* Newline separated generator names. */
SOLREC_API solrec_status solrec_generator_list(char** out);
/* base is a base graph file, or an instance file for vcd_to_dsd. model may be
   NULL. names receives "<id> <name>" lines for the gadget vertices and may be NULL. */
SOLREC_API solrec_status solrec_generate(const char* generator, const char* base, int param,
                                         const char* model, solrec_instance** out, char** names);

/* text is an instance or a base graph file. Writes a PACE .td decomposition. */
SOLREC_API solrec_status solrec_decompose(const char* text, int exact, char** td, int* width);

/* solvers is a comma separated list. */
SOLREC_API solrec_status solrec_bench(const char* corpus_dir, const char* solvers,
                                      const solrec_solve_options* opts, int jobs,
                                      solrec_format format, char** table, int* disagreements);

#ifdef __cplusplus
}
#endif

#endif

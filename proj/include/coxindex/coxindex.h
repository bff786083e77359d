/*
 * C interface to the coxindex library.
 *
 * Graphs are opaque handles. Every call returns a coxidx_status; on failure the
 * message is available from coxidx_last_error() on the same thread. Strings handed
 * out through char** parameters are owned by the caller and released with
 * coxidx_string_free().
 */
#ifndef COXINDEX_COXINDEX_H
#define COXINDEX_COXINDEX_H

#include <stddef.h>

#if defined(_WIN32)
#define COXIDX_API __declspec(dllexport)
#else
#define COXIDX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct coxidx_graph coxidx_graph;

typedef enum coxidx_status {
    COXIDX_OK = 0,
    COXIDX_E_ARGUMENT = 1,   /* null pointer or invalid option value */
    COXIDX_E_INPUT = 2,      /* unknown vertex, malformed request */
    COXIDX_E_PARSE = 3,      /* graph document could not be parsed */
    COXIDX_E_IO = 4,         /* file could not be read */
    COXIDX_E_RESOURCE = 5,   /* size cap exceeded */
    COXIDX_E_CONTRACT = 6,   /* precondition violated */
    COXIDX_E_GENERATION = 7, /* generated graph failed verification */
    COXIDX_E_INTERNAL = 8
} coxidx_status;

typedef enum coxidx_graph_format {
    COXIDX_GRAPH_AUTO = 0,
    COXIDX_GRAPH_EDGELIST = 1,
    COXIDX_GRAPH_JSON = 2
} coxidx_graph_format;

typedef enum coxidx_report_format {
    COXIDX_REPORT_JSON = 0,
    COXIDX_REPORT_TEXT = 1
} coxidx_report_format;

COXIDX_API const char* coxidx_last_error(void);
COXIDX_API const char* coxidx_version(void);
COXIDX_API void coxidx_string_free(char* s);

/* Worker threads for internal parallel loops; n < 1 is treated as 1. */
COXIDX_API void coxidx_set_threads(int n);
COXIDX_API int coxidx_threads(void);

/* Graph handles. */
COXIDX_API coxidx_status coxidx_graph_parse(const char* text, coxidx_graph_format format, coxidx_graph** out);
COXIDX_API coxidx_status coxidx_graph_load(const char* path, coxidx_graph_format format, coxidx_graph** out);
COXIDX_API coxidx_status coxidx_graph_builtin(const char* name, coxidx_graph** out);
COXIDX_API void coxidx_graph_free(coxidx_graph* g);
COXIDX_API int coxidx_graph_vertex_count(const coxidx_graph* g);
COXIDX_API int coxidx_graph_edge_count(const coxidx_graph* g);
COXIDX_API coxidx_status coxidx_graph_emit(const coxidx_graph* g, coxidx_graph_format format, char** out);

/* Reports. `level` < 0 in coxidx_lambda means every computed level. */
COXIDX_API coxidx_status coxidx_index(const coxidx_graph* g, coxidx_report_format format, char** out);
/* *index receives the hypergraph index, or -1 when it is infinite. */
COXIDX_API coxidx_status coxidx_index_value(const coxidx_graph* g, int* index);
COXIDX_API coxidx_status coxidx_lambda(const coxidx_graph* g, int level, coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_lambda_dot(const coxidx_graph* g, int level, char** out);
COXIDX_API coxidx_status coxidx_omega(const coxidx_graph* g, coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_psi(const coxidx_graph* g, coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_spectrum(const coxidx_graph* g, int cap, coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_rank(const coxidx_graph* g, const char* s, const char* t, int max_level,
                                     coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_bounds(const coxidx_graph* g, coxidx_report_format format, char** out);
COXIDX_API coxidx_status coxidx_check_thm72(const coxidx_graph* g, const char* u, const char* v,
                                            coxidx_report_format format, char** out);

/*
 * Builds the counterexample graph for parameter n from `seed` (Theta8 when NULL).
 * `links` is NULL or a list of steps separated by ';', each step "p,q:r,s" giving
 * the link of u_k and of v_k by vertex label; steps not listed are searched for.
 * On success *out_graph receives the graph and *out_certificate the JSON report.
 */
COXIDX_API coxidx_status coxidx_generate_gamma_n(int n, const coxidx_graph* seed, const char* links,
                                                 coxidx_graph** out_graph, char** out_certificate);

/* Compares the optimized path with the brute-force oracle. *mismatch is set to 1 on any difference. */
COXIDX_API coxidx_status coxidx_oracle_diff(const coxidx_graph* g, coxidx_report_format format, int* mismatch,
                                            char** out);

#ifdef __cplusplus
}
#endif

#endif /* COXINDEX_COXINDEX_H */

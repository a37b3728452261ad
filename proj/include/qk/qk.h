#ifndef QK_QK_H
#define QK_QK_H

/*
 * C interface to the quasi-kernel library.
 *
 * Every fallible call returns a qk_status. On failure the message of the last
 * error raised on the calling thread is available from qk_last_error() until
 * the next failing call on that thread. Handles are opaque and owned by the
 * caller; strings and vertex lists returned through out-parameters are
 * released with qk_string_free and qk_vertex_list_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QK_BUILDING_LIBRARY)
#    define QK_API __declspec(dllexport)
#  else
#    define QK_API __declspec(dllimport)
#  endif
#else
#  define QK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qk_status {
    QK_OK = 0,
    QK_ERR_ARGUMENT = 1,     /* contract violation: bad vertex, ordering, option */
    QK_ERR_PARSE = 2,        /* graph text or JSON could not be parsed */
    QK_ERR_PRECONDITION = 3, /* input does not satisfy a construction's hypothesis */
    QK_ERR_RESOURCE = 4,     /* exact-solver vertex or subset cap exceeded */
    QK_ERR_VERIFICATION = 5, /* a construction failed its own check */
    QK_ERR_IO = 6,
    QK_ERR_INTERNAL = 7
} qk_status;

typedef struct qk_graph qk_graph;
typedef struct qk_report qk_report;

typedef struct qk_vertex_list {
    uint32_t * data;
    size_t size;
} qk_vertex_list;

/* max_subsets == 0 means no subset cap. */
typedef struct qk_limits {
    size_t max_n;
    uint64_t max_subsets;
} qk_limits;

QK_API const char * qk_version(void);
QK_API const char * qk_last_error(void);
QK_API const char * qk_status_name(qk_status status);
QK_API qk_limits qk_default_limits(void);
QK_API void qk_string_free(char * s);
QK_API void qk_vertex_list_free(qk_vertex_list * list);

/* ---- graphs ---------------------------------------------------------- */

QK_API qk_status qk_graph_parse(const char * text, qk_graph ** out);
QK_API qk_status qk_graph_load(const char * path, qk_graph ** out);
/* `arcs` holds arc_count (tail, head) pairs, 2 * arc_count entries. */
QK_API qk_status qk_graph_from_arcs(size_t n, const uint32_t * arcs, size_t arc_count, qk_graph ** out);
QK_API void qk_graph_free(qk_graph * g);
QK_API size_t qk_graph_order(const qk_graph * g);
QK_API size_t qk_graph_arc_count(const qk_graph * g);
QK_API qk_status qk_graph_serialize(const qk_graph * g, char ** out_text);

/* ---- predicates ------------------------------------------------------ */

typedef enum qk_check_mode {
    QK_CHECK_KERNEL = 0,
    QK_CHECK_QK = 1,
    QK_CHECK_Q_KERNEL = 2, /* uses the q argument */
    QK_CHECK_QUASI_SINK = 3,
    QK_CHECK_LARGE = 4
} qk_check_mode;

typedef enum qk_witness_kind {
    QK_WITNESS_NONE = -1,
    QK_WITNESS_ARC = 0,          /* arc first -> second inside the set */
    QK_WITNESS_UNCOVERED = 1,    /* vertex first not reached */
    QK_WITNESS_SMALL_CLOSURE = 2 /* closed out-neighbourhood has first vertices */
} qk_witness_kind;

typedef struct qk_check_result {
    int holds;
    qk_witness_kind witness_kind;
    uint32_t witness_first;
    uint32_t witness_second;
} qk_check_result;

/* `description` may be NULL; otherwise receives a human-readable line. */
QK_API qk_status qk_check(const qk_graph * g, const uint32_t * set, size_t set_size, qk_check_mode mode, unsigned q,
                          qk_check_result * out, char ** description);

/* ---- greedy algorithms ----------------------------------------------- */

/* `order` may be NULL for the natural order; otherwise a permutation of
 * 0..n-1. With `modified` != 0 the single-phase variant runs. */
QK_API qk_status qk_cl(const qk_graph * g, const uint32_t * order, size_t order_size, int modified,
                       qk_vertex_list * out);
QK_API qk_status qk_random_order(size_t n, uint64_t seed, qk_vertex_list * out);

/* ---- exact solvers --------------------------------------------------- */

typedef enum qk_solve_mode {
    QK_SOLVE_SMALLEST = 0,
    QK_SOLVE_ENUMERATE = 1,
    QK_SOLVE_KERNELS = 2,
    QK_SOLVE_KERNEL_PERFECT = 3,
    QK_SOLVE_DISJOINT_PAIR = 4
} qk_solve_mode;

/* `limits` may be NULL for defaults. The result is a JSON document with
 * sets as sorted vertex lists. */
QK_API qk_status qk_solve(const qk_graph * g, qk_solve_mode mode, unsigned q, const qk_limits * limits,
                          char ** out_json);
QK_API qk_status qk_smallest_q_kernel(const qk_graph * g, unsigned q, const qk_limits * limits, qk_vertex_list * out);
QK_API qk_status qk_kls_bound(const qk_graph * g, int64_t * numerator, int64_t * denominator);

/* ---- constructions --------------------------------------------------- */

typedef enum qk_method {
    QK_METHOD_GOOD = 0,
    QK_METHOD_COMPLEMENT = 1,
    QK_METHOD_HAIRY = 2,
    QK_METHOD_UNICYCLIC = 3
} qk_method;

/* Missing inputs are searched for with the exact solver: a good
 * quasi-kernel for GOOD, a quasi-kernel with a kernel on the complement of
 * its closed out-neighbourhood for COMPLEMENT. For HAIRY the partition is
 * read from `partition_json` (a generator sidecar or a bare
 * {"tournament": [...], "hairs": [...]} object) or inferred. */
typedef struct qk_construct_options {
    const uint32_t * qk;
    size_t qk_size;
    int has_qk;
    const uint32_t * kernel;
    size_t kernel_size;
    int has_kernel;
    const char * partition_json;
    int relaxed;
    qk_limits limits;
} qk_construct_options;

QK_API qk_construct_options qk_default_construct_options(void);
QK_API qk_status qk_construct(const qk_graph * g, qk_method method, const qk_construct_options * options,
                              char ** out_trace_json);
QK_API qk_status qk_find_king(const qk_graph * g, uint32_t * out);

/* ---- generators ------------------------------------------------------ */

typedef struct qk_gen_params {
    size_t n;         /* cycle length, tight-hairy n, random order */
    size_t k;         /* three-hub leaves per hub */
    size_t max_hairs; /* random-hairy */
    double arc_prob;  /* random */
    int source_free;  /* random */
    int strongly_connected; /* tight-hairy */
    uint64_t seed;
} qk_gen_params;

QK_API qk_gen_params qk_default_gen_params(void);

/* family: cycle, three-hub, tight-hairy, random, random-tournament,
 * random-hairy (n = tournament size), random-unicyclic. `out_meta_json` may
 * be NULL; otherwise it receives the sidecar (labels, partition, cycle). */
QK_API qk_status qk_generate(const char * family, const qk_gen_params * params, qk_graph ** out,
                             char ** out_meta_json);

/* ---- sweeps ---------------------------------------------------------- */

typedef struct qk_sweep_options {
    const char * claim;
    const char * family;
    size_t n_min;
    size_t n_max;
    uint64_t samples;
    uint64_t seed;
    size_t max_hairs;
    unsigned jobs;
    qk_limits limits;
} qk_sweep_options;

QK_API qk_sweep_options qk_default_sweep_options(void);
QK_API qk_status qk_sweep_run(const qk_sweep_options * options, qk_report ** out);
QK_API void qk_report_free(qk_report * r);
QK_API uint64_t qk_report_instances(const qk_report * r);
QK_API uint64_t qk_report_passes(const qk_report * r);
QK_API uint64_t qk_report_skips(const qk_report * r);
QK_API uint64_t qk_report_violations(const qk_report * r);
QK_API uint64_t qk_report_aborted(const qk_report * r);
QK_API int qk_report_is_conjecture(const qk_report * r);
/* format: "json", "csv" or "text". */
QK_API qk_status qk_report_emit(const qk_report * r, const char * format, char ** out);

#ifdef __cplusplus
}
#endif

#endif

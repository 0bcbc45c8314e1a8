/*
 * C interface to the citenet citation-network toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a citenet_status;
 * on failure a thread-local message is available from citenet_last_error().
 */
#ifndef CITENET_CITENET_H
#define CITENET_CITENET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CITENET_API __declspec(dllexport)
#else
#  define CITENET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum citenet_status {
  CITENET_OK = 0,
  CITENET_E_USAGE = 1,
  CITENET_E_IO = 2,
  CITENET_E_VALIDATION = 3,
  CITENET_E_NOT_FOUND = 4,
  CITENET_E_DOMAIN = 5,
  CITENET_E_NONCONVERGENCE = 6,
  CITENET_E_BUFFER_TOO_SMALL = 7,
  CITENET_E_INTERNAL = 8
} citenet_status;

typedef struct citenet_graph citenet_graph;
typedef struct citenet_result citenet_result;

/* Process exit code for a status: 0 success, 1 usage, 2 ingest/validation,
 * 3 non-convergence. */
CITENET_API int citenet_exit_code(citenet_status status);
CITENET_API const char* citenet_status_name(citenet_status status);
CITENET_API const char* citenet_last_error(void);

/* ---- graph ---------------------------------------------------------- */

CITENET_API citenet_status citenet_graph_load(const char* citations_path, int strict,
                                              citenet_graph** out);
CITENET_API citenet_status citenet_graph_from_edges(const int64_t* citing, const int64_t* cited,
                                                    size_t edge_count, citenet_graph** out);
CITENET_API void citenet_graph_free(citenet_graph* graph);

CITENET_API size_t citenet_graph_node_count(const citenet_graph* graph);
CITENET_API size_t citenet_graph_edge_count(const citenet_graph* graph);
CITENET_API citenet_status citenet_graph_indegree(const citenet_graph* graph, int64_t id,
                                                  size_t* out);
CITENET_API citenet_status citenet_graph_outdegree(const citenet_graph* graph, int64_t id,
                                                   size_t* out);

/* ---- analyses ------------------------------------------------------- */

/* Writes one (id, score) pair per node in ascending id order. `capacity`
 * must be at least the node count; *written receives the node count either
 * way. */
CITENET_API citenet_status citenet_pagerank(const citenet_graph* graph, double damping,
                                            unsigned max_iter, double tolerance, int64_t* ids,
                                            double* scores, size_t capacity, size_t* written);

/* Sorted neighborhood of `root`. *count receives the set size; when it
 * exceeds capacity nothing is written and CITENET_E_BUFFER_TOO_SMALL is
 * returned. */
CITENET_API citenet_status citenet_neighborhood(const citenet_graph* graph, int64_t root,
                                                size_t depth, int closed, int64_t* members,
                                                size_t capacity, size_t* count);

CITENET_API citenet_status citenet_percentile_threshold(const uint64_t* values, size_t count,
                                                        double percentile, uint64_t* out);
CITENET_API citenet_status citenet_pearson(const double* x, const double* y, size_t count,
                                           double* out);

/* ---- pipeline runs -------------------------------------------------- */

typedef struct citenet_options {
  const char* citations_path;
  const char* metadata_path; /* NULL when absent */
  const char* output_dir;    /* NULL means "." */
  const char* encoding;      /* NULL means "latin-1" */
  int strict;

  /* 0-based metadata columns; negative resolves from the header. */
  int id_col;
  int company_col;
  int date_col;

  size_t top_k; /* 0 picks the subcommand default */
  double damping;
  unsigned max_iter;
  double tolerance;
  size_t depth;
  size_t max_depth;
  int closed;
  const char* export_format; /* NULL, "dot", "graphml" or "tsv" */
  const int64_t* seeds;      /* optional seed override */
  size_t seed_count;
  size_t histogram_split;
  size_t bin_count;
  size_t partitions;
  double percentile;
  const char* degree_direction; /* NULL means "out" */
} citenet_options;

/* Fills `options` with the defaults (damping 0.85, max_iter 200, ...). */
CITENET_API void citenet_options_init(citenet_options* options);

/* Runs one subcommand ("stats", "indegree", "pagerank", "clusters",
 * "companies", "partitions"). On success *out holds the run summary and
 * must be released with citenet_result_free. */
CITENET_API citenet_status citenet_run(const char* subcommand, const citenet_options* options,
                                       citenet_result** out);

CITENET_API const char* citenet_result_summary(const citenet_result* result);
CITENET_API size_t citenet_result_warning_count(const citenet_result* result);
CITENET_API const char* citenet_result_warning(const citenet_result* result, size_t index);
CITENET_API size_t citenet_result_file_count(const citenet_result* result);
CITENET_API const char* citenet_result_file(const citenet_result* result, size_t index);
CITENET_API void citenet_result_free(citenet_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CITENET_CITENET_H */

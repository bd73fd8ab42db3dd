#ifndef ULCF_ULCF_H
#define ULCF_ULCF_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define ULCF_API __attribute__((visibility("default")))
#else
#define ULCF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure ulcf_last_error() holds a
 * message for the calling thread until its next call. Strings returned
 * through char** are heap-allocated and released with ulcf_string_free. */
typedef enum ulcf_status {
  ULCF_OK = 0,
  ULCF_ERR_PARSE = 1,
  ULCF_ERR_INVALID_ARGUMENT = 2,
  ULCF_ERR_PRECONDITION = 3,
  ULCF_ERR_LIMIT = 4,
  ULCF_ERR_INTERNAL = 5
} ulcf_status;

typedef struct ulcf_graph ulcf_graph;
typedef struct ulcf_lists ulcf_lists;
typedef struct ulcf_polynomial ulcf_polynomial;

ULCF_API const char* ulcf_version(void);
ULCF_API const char* ulcf_last_error(void);
ULCF_API void ulcf_string_free(char* s);

/* Graphs */

ULCF_API ulcf_status ulcf_graph_from_graph6(const char* text, ulcf_graph** out);
/* "n: u-v, u-v, ..." */
ULCF_API ulcf_status ulcf_graph_from_edge_list(const char* text, ulcf_graph** out);
/* Entry `index` (0-based) of the order-n catalog; cache_dir may be NULL. */
ULCF_API ulcf_status ulcf_graph_from_catalog(int n, int index, const char* cache_dir,
                                             ulcf_graph** out);
ULCF_API void ulcf_graph_free(ulcf_graph* g);
ULCF_API int ulcf_graph_order(const ulcf_graph* g);
ULCF_API int ulcf_graph_size(const ulcf_graph* g);
ULCF_API ulcf_status ulcf_graph_to_graph6(const ulcf_graph* g, char** out);
ULCF_API ulcf_status ulcf_graph_to_edge_list(const ulcf_graph* g, char** out);

/* {"order": N, "elements": ["(0 1)(2)", ...], "a": .., "b": ..} */
ULCF_API ulcf_status ulcf_automorphisms_json(const ulcf_graph* g, char** out);

/* Polynomials */

ULCF_API ulcf_status ulcf_chromatic_polynomial(const ulcf_graph* g, ulcf_polynomial** out);
ULCF_API ulcf_status ulcf_unlabeled_chromatic_polynomial(const ulcf_graph* g,
                                                         ulcf_polynomial** out);
ULCF_API void ulcf_polynomial_free(ulcf_polynomial* p);
ULCF_API ulcf_status ulcf_polynomial_to_string(const ulcf_polynomial* p, char** out);
ULCF_API ulcf_status ulcf_polynomial_factored(const ulcf_polynomial* p, char** out);
/* Array of "num/den" coefficients, constant term first. */
ULCF_API ulcf_status ulcf_polynomial_to_json(const ulcf_polynomial* p, char** out);
/* Exact value as an integer or "num/den" string. */
ULCF_API ulcf_status ulcf_polynomial_evaluate(const ulcf_polynomial* p, long k, char** out);

/* List assignments */

/* "v:c,c;v:c,c" */
ULCF_API ulcf_status ulcf_lists_parse(const char* text, ulcf_lists** out);
/* {"lists": [[...], ...]} */
ULCF_API ulcf_status ulcf_lists_from_json(const char* json, ulcf_lists** out);
ULCF_API ulcf_status ulcf_lists_constant(int n, int k, ulcf_lists** out);
ULCF_API void ulcf_lists_free(ulcf_lists* lists);
ULCF_API ulcf_status ulcf_lists_to_json(const ulcf_lists* lists, char** out);

ULCF_API ulcf_status ulcf_count_list_colorings(const ulcf_graph* g, const ulcf_lists* lists,
                                               uint64_t* out);
ULCF_API ulcf_status ulcf_count_unlabeled_list_colorings(const ulcf_graph* g,
                                                         const ulcf_lists* lists, uint64_t* out);
ULCF_API ulcf_status ulcf_burnside_bound(const ulcf_graph* g, const ulcf_lists* lists,
                                         char** out);

/* Exact minimization over k-assignments; JSON search result with value,
 * witnesses, explored pattern count. */
ULCF_API ulcf_status ulcf_list_color_function(const ulcf_graph* g, int k, int workers,
                                              char** out);
ULCF_API ulcf_status ulcf_unlabeled_list_color_function(const ulcf_graph* g, int k, int workers,
                                                        char** out);
ULCF_API ulcf_status ulcf_threshold_search(const ulcf_graph* g, int k_max, int workers,
                                           char** out);

/* Catalog */

/* -1 matches anything, 0 requires false, 1 requires true. */
typedef struct ulcf_catalog_filter {
  int connected;
  int point_determining;
  int chordal;
  int triangle_free;
} ulcf_catalog_filter;

/* JSON array of entries; filter and cache_dir may be NULL. */
ULCF_API ulcf_status ulcf_catalog_json(int n, const ulcf_catalog_filter* filter,
                                       const char* cache_dir, char** out);

/* Verification suites */

typedef struct ulcf_suite_options {
  int max_order;
  int kmax;
  uint64_t seed;
  int workers;
  int assignments;
  int burnside_instances;
  int path_instances;
  int union_max_order;
  int list_k;
  int search_max_order;
  int search_kmax;
} ulcf_suite_options;

ULCF_API void ulcf_suite_options_default(ulcf_suite_options* options);
/* JSON array of suite names, "all" excluded. */
ULCF_API ulcf_status ulcf_suite_names(char** out);
/* Reports as JSON lines in canonical order and a per-claim summary object.
 * runtime_ms is included only when include_timing is nonzero. Either output
 * pointer and `failures` may be NULL. */
ULCF_API ulcf_status ulcf_verify_suite(const char* name, const ulcf_suite_options* options,
                                       int include_timing, char** reports_out,
                                       char** summary_out, int* failures);

#ifdef __cplusplus
}
#endif

#endif

/* C interface to the irvzones library.
 *
 * Trees are opaque handles created from tree-file text or a generator spec.
 * Analysis calls return a JSON document through an out parameter; free it
 * with irvz_string_free. Every call reports an irvz_status; on failure,
 * irvz_last_error() describes the problem for the calling thread.
 */
#ifndef IRVZONES_H
#define IRVZONES_H

#include <stdint.h>

#ifdef _WIN32
#define IRVZ_API __declspec(dllexport)
#else
#define IRVZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irvz_status {
    IRVZ_OK = 0,
    IRVZ_ERR_ARGUMENT = 1,     /* invalid parameter or vertex set */
    IRVZ_ERR_PARSE = 2,        /* malformed tree text or spec string */
    IRVZ_ERR_BUDGET = 3,       /* enumeration larger than the configured cap */
    IRVZ_ERR_CHECK_FAILED = 4, /* fast path and brute-force oracle disagree */
    IRVZ_ERR_INTERNAL = 5
} irvz_status;

typedef struct irvz_tree irvz_tree;

IRVZ_API const char* irvz_version(void);
IRVZ_API const char* irvz_last_error(void);
IRVZ_API void irvz_string_free(char* s);

IRVZ_API irvz_status irvz_tree_parse(const char* text, irvz_tree** out);
IRVZ_API irvz_status irvz_tree_generate(const char* family_spec,
                                        irvz_tree** out);
IRVZ_API void irvz_tree_free(irvz_tree* tree);

IRVZ_API int irvz_tree_order(const irvz_tree* tree);
/* -1 when a vertex is out of range */
IRVZ_API int irvz_tree_distance(const irvz_tree* tree, int a, int b);
IRVZ_API int irvz_tree_tie_id(const irvz_tree* tree, int v);
IRVZ_API irvz_status irvz_tree_to_text(const irvz_tree* tree, char** out);

/* policy: "default", "prop2", or "prop3". */
IRVZ_API irvz_status irvz_elect(const irvz_tree* tree, const int* candidates,
                                int count, const char* policy,
                                char** out_json);

/* check != 0 reruns the query against the subset-enumeration oracle and
 * fails with IRVZ_ERR_CHECK_FAILED on disagreement. */
IRVZ_API irvz_status irvz_kill(const irvz_tree* tree, int designated,
                               const int* allowed, int count, int check,
                               char** out_json);

IRVZ_API irvz_status irvz_zone_verify(const irvz_tree* tree, const int* zone,
                                      int count, int check, int jobs,
                                      char** out_json);
IRVZ_API irvz_status irvz_zone_min(const irvz_tree* tree, int check, int jobs,
                                   char** out_json);
IRVZ_API irvz_status irvz_zone_enumerate(const irvz_tree* tree, int check,
                                         int jobs, char** out_json);

/* config_spec: "all", "size:k", "explicit:a,b,c", or "random:count:size". */
IRVZ_API irvz_status irvz_distortion(const irvz_tree* tree,
                                     const char* config_spec,
                                     const char* policy, uint64_t seed,
                                     int jobs, char** out_json);

/* Flat tab-separated table of the same scan, one configuration per row. */
IRVZ_API irvz_status irvz_distortion_table(const irvz_tree* tree,
                                           const char* config_spec,
                                           const char* policy, uint64_t seed,
                                           int jobs, char** out_table);

/* Cross-checks the solvers against brute-force references on every labeled
 * tree with up to max_n vertices (max_n <= 6 keeps it quick). */
IRVZ_API irvz_status irvz_selftest(int max_n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif

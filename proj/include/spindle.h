/* C interface to the spindle solver library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return SP_OK on success; on failure they return an error code
 * and leave a diagnostic retrievable through sp_last_error(). Handles
 * written through out-parameters are owned by the caller and must be
 * released with the matching *_free function. Optional witness results are
 * set to NULL when the answer is "no witness".
 */

#ifndef SPINDLE_H
#define SPINDLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SP_API __declspec(dllexport)
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
    SP_OK = 0,
    SP_ERR_ARGUMENT = 1, /* precondition violated */
    SP_ERR_PARSE = 2,    /* malformed digraph text */
    SP_ERR_GUARD = 3,    /* exhaustive-search size guard refused the input */
    SP_ERR_INTERNAL = 4
} sp_status;

typedef struct sp_digraph sp_digraph;
typedef struct sp_witness sp_witness;
typedef struct sp_instance sp_instance;

/* Solver options; zero-initialize then adjust. */
typedef struct sp_options {
    uint64_t seed;
    int jobs;                  /* <= 1 means sequential */
    long long trials;          /* color-coding trials; <= 0 selects the default policy */
    int exact_short_threshold; /* <= 0 selects the default (14) */
    int oracle_guard;          /* <= 0 selects the default (14) */
} sp_options;

SP_API void sp_options_init(sp_options* opts);

/* Thread-local message for the most recent failure. */
SP_API const char* sp_last_error(void);

SP_API const char* sp_version(void);

/* Process-wide search-effort counter (search nodes, augmentations, DP
 * entries, trials); reset before a solve to measure it. */
SP_API void sp_effort_reset(void);
SP_API uint64_t sp_effort_ticks(void);

/* ---- digraphs ---- */

SP_API sp_status sp_digraph_parse(const char* text, size_t len, sp_digraph** out);
SP_API sp_status sp_digraph_create(int n, const int* tails, const int* heads, int arc_count,
                                   sp_digraph** out);
/* Serialized file format; caller frees with sp_string_free. */
SP_API sp_status sp_digraph_serialize(const sp_digraph* g, char** out);
SP_API void sp_string_free(char* s);
SP_API void sp_digraph_free(sp_digraph* g);

SP_API int sp_digraph_vertex_count(const sp_digraph* g);
SP_API int sp_digraph_arc_count(const sp_digraph* g);
SP_API int sp_digraph_arc_tail(const sp_digraph* g, int arc);
SP_API int sp_digraph_arc_head(const sp_digraph* g, int arc);
/* 1 when acyclic; order (length n) receives a topological order if non-NULL. */
SP_API int sp_digraph_topological_order(const sp_digraph* g, int* order);

/* ---- witnesses ---- */

SP_API sp_status sp_witness_create(int tail, int head, sp_witness** out);
SP_API sp_status sp_witness_add_path(sp_witness* w, const int* vertices, int vertex_count,
                                     const int* arcs, int arc_count);
SP_API void sp_witness_free(sp_witness* w);

SP_API int sp_witness_tail(const sp_witness* w);
SP_API int sp_witness_head(const sp_witness* w);
SP_API int sp_witness_path_count(const sp_witness* w);
SP_API int sp_witness_path_length(const sp_witness* w, int path);
/* vertices has path_length+1 entries, arcs path_length entries. */
SP_API sp_status sp_witness_path_vertices(const sp_witness* w, int path, int* vertices);
SP_API sp_status sp_witness_path_arcs(const sp_witness* w, int path, int* arcs);

/* `exact` selects exact-subgraph semantics, otherwise subdivision. */
SP_API sp_status sp_validate_witness(const sp_digraph* g, const int* lengths, int k, int exact,
                                     const sp_witness* w, int* valid);

/* ---- solvers ----
 * Witness out-parameters may be NULL when only the decision is needed.
 */

SP_API sp_status sp_solve_max_k(const sp_digraph* g, int len, const sp_options* opts,
                                int* k_star, sp_witness** witness);
SP_API sp_status sp_solve_total_length(const sp_digraph* g, int total, const sp_options* opts,
                                       int* found, sp_witness** witness);
SP_API sp_status sp_solve_fixed_lengths(const sp_digraph* g, int len1, int len2,
                                        const sp_options* opts, int* found,
                                        sp_witness** witness);
SP_API sp_status sp_find_exact_colorcoding(const sp_digraph* g, int len1, int len2,
                                           const sp_options* opts, int* found,
                                           sp_witness** witness);
SP_API sp_status sp_solve_dag(const sp_digraph* g, int k, int len, int* found,
                              sp_witness** witness);

SP_API sp_status sp_oracle_find(const sp_digraph* g, const int* lengths, int k, int exact,
                                int guard, int* found, sp_witness** witness);
SP_API sp_status sp_oracle_max_k(const sp_digraph* g, int len, int guard, int* k_star);
SP_API sp_status sp_oracle_max_total(const sp_digraph* g, int guard, int* total);
SP_API sp_status sp_oracle_disjoint_pack(const sp_digraph* g, int count, int guard, int* found);

/* ---- reduction generators ----
 * Instances bundle the output digraph, the encoded target, an optional
 * planted witness, and provenance key/value pairs.
 */

SP_API sp_status sp_gen_longest_path(const sp_digraph* g, int k, sp_instance** out);
/* triples is m rows of (a, b, c); solution may be NULL or m' triple indices. */
SP_API sp_status sp_gen_3dm(int n, const int* triples, int m, int len, const int* solution,
                            int solution_len, sp_instance** out);
SP_API sp_status sp_gen_hampath_total(const sp_digraph* g, int s, int t, sp_instance** out);
SP_API sp_status sp_gen_hampath_fixed(const sp_digraph* g, int s, int t, int len1,
                                      sp_instance** out);
/* edges is m rows of (u, v); classes maps each vertex to 0, 1, or 2. */
SP_API sp_status sp_gen_triangles(int n, const int* edges, int m, const int* classes,
                                  sp_instance** out);

SP_API void sp_instance_free(sp_instance* inst);
/* Borrowed references, valid while the instance lives. */
SP_API const sp_digraph* sp_instance_digraph(const sp_instance* inst);
SP_API const sp_witness* sp_instance_planted(const sp_instance* inst);
SP_API const char* sp_instance_reduction(const sp_instance* inst);
/* Target lengths when the instance encodes a spindle spec; returns the
 * number of lengths (0 when none). Pass NULL to just query the count. */
SP_API int sp_instance_target_lengths(const sp_instance* inst, int* lengths);
SP_API int sp_instance_pack_target(const sp_instance* inst);  /* -1 when absent */
SP_API int sp_instance_total_target(const sp_instance* inst); /* -1 when absent */
SP_API int sp_instance_field_count(const sp_instance* inst);
SP_API const char* sp_instance_field_key(const sp_instance* inst, int i);
SP_API const char* sp_instance_field_value(const sp_instance* inst, int i);

#ifdef __cplusplus
}
#endif

#endif /* SPINDLE_H */

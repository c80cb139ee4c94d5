#ifndef KNESERLAB_H
#define KNESERLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KNESERLAB_BUILDING)
#define KL_API __attribute__((visibility("default")))
#else
#define KL_API
#endif

typedef enum kl_status {
  KL_OK = 0,
  KL_INVALID_ARGUMENT = 1,
  KL_PARSE = 2,
  KL_RESOURCE = 3,       /* node budget or size guard exceeded */
  KL_VERIFICATION = 4,   /* an internal consistency check failed */
  KL_INTERNAL = 5
} kl_status;

typedef enum kl_variant { KL_SET_EDGES = 0, KL_MULTISET_EDGES = 1 } kl_variant;

typedef enum kl_family { KL_EXAMPLE1 = 0, KL_COUNTEREXAMPLE1 = 1 } kl_family;

typedef enum kl_action { KL_ACTION_FREE = 0, KL_ACTION_FIXED_POINT_FREE = 1, KL_ACTION_NEITHER = 2 } kl_action;

/* Flags for kl_bound_report. */
enum {
  KL_BOUND_COMB = 1u,
  KL_BOUND_TOPO = 2u,
  KL_BOUND_ORACLE = 4u,
  KL_BOUND_TIMINGS = 8u
};

typedef struct kl_set_system kl_set_system;
typedef struct kl_hypergraph kl_hypergraph;
typedef struct kl_complex kl_complex;

/* Size guards for complexes; NULL anywhere a guard is accepted means defaults. */
typedef struct kl_guard {
  size_t max_faces;
  size_t max_nonzeros;
} kl_guard;

typedef struct kl_random_spec {
  uint64_t seed;
  int n_max;
  int m_max;
  int max_set_size;
  int r_min;
  int r_max;
  int s_max; /* 0: up to r-1 */
} kl_random_spec;

typedef struct kl_defect_result {
  int value;
  int max_cover;
  uint64_t nodes;
} kl_defect_result;

typedef struct kl_betti_summary {
  int p;
  int dim;
  int connectivity; /* -2 for the empty complex */
  int acyclic;
  int euler_ok;
  int boundary_ok; /* every composite boundary vanishes */
} kl_betti_summary;

/* Message for the last failed call on this thread; never NULL. */
KL_API const char* kl_last_error(void);
KL_API const char* kl_version(void);

/* Every char* handed out by the library is released with kl_string_free. */
KL_API void kl_string_free(char* s);

/* 0 means: KNESERLAB_NODE_BUDGET if set, else the built-in default. */
KL_API uint64_t kl_default_node_budget(void);
KL_API kl_guard kl_default_guard(void);
KL_API kl_random_spec kl_default_random_spec(void);

/* ---- set systems ---- */
KL_API kl_status kl_set_system_parse(const char* text, kl_set_system** out);
KL_API kl_status kl_set_system_complete(int n, int k, kl_set_system** out);
KL_API kl_status kl_set_system_worked(kl_family family, int n, kl_set_system** out);
KL_API kl_status kl_set_system_random(uint64_t seed, int n, int m, int max_set_size, kl_set_system** out);
KL_API kl_status kl_random_instance(const kl_random_spec* spec, int index, kl_set_system** out, int* r, int* s);
KL_API kl_status kl_set_system_serialize(const kl_set_system* t, char** out);
KL_API int kl_set_system_ground_size(const kl_set_system* t);
KL_API int kl_set_system_size(const kl_set_system* t);
KL_API void kl_set_system_free(kl_set_system* t);

/* ---- hypergraphs ---- */
KL_API kl_status kl_hypergraph_build(const kl_set_system* t, int r, int s, kl_variant variant, kl_hypergraph** out);
KL_API kl_status kl_hypergraph_parse(const char* text, kl_hypergraph** out);
KL_API kl_status kl_hypergraph_serialize(const kl_hypergraph* h, char** out);
KL_API int kl_hypergraph_node_count(const kl_hypergraph* h);
KL_API int kl_hypergraph_uniformity(const kl_hypergraph* h);
KL_API size_t kl_hypergraph_edge_count(const kl_hypergraph* h);
KL_API void kl_hypergraph_free(kl_hypergraph* h);

/* ---- solvers ---- */
/* witness (nullable) receives the optimal tuple as "1,2||3": parts separated by '|', elements by ','. */
KL_API kl_status kl_defect(const kl_set_system* t, int r, int s, uint64_t node_budget, kl_defect_result* out,
                           char** witness);
KL_API kl_status kl_defect_oracle(const kl_set_system* t, int r, int s, int* out);
/* colours (nullable) receives "colour v c" lines of the lexicographically least optimal colouring. */
KL_API kl_status kl_chromatic(const kl_hypergraph* h, uint64_t node_budget, int* chi, char** colours);
KL_API kl_status kl_is_proper(const kl_hypergraph* h, const int* colours, size_t len, int* proper);

/* ---- reports (TSV) ---- */
/* note receives the reason the topological bound was skipped, or "". */
KL_API kl_status kl_bound_report(const char* id, const kl_set_system* t, int r, int s, unsigned flags,
                                 uint64_t node_budget, char** tsv, char** note, int* all_pass);
KL_API kl_status kl_reproduce_worked(uint64_t node_budget, int timings, char** tsv, int* all_pass);
KL_API kl_status kl_verify_suite(const kl_random_spec* spec, int count, uint64_t node_budget, int timings,
                                 char** tsv, int* failures);

/* ---- complexes ---- */
KL_API kl_status kl_complex_box(const kl_hypergraph* h, const kl_guard* guard, kl_complex** out);
KL_API kl_status kl_complex_deleted_join(int n, int r, int w, const kl_guard* guard, kl_complex** out);
KL_API kl_status kl_complex_colour(int m, int r, const kl_guard* guard, kl_complex** out);
/* Order complex of all s-disjoint r-tuples of subsets of [n] with nonempty union. */
KL_API kl_status kl_complex_order(int n, int r, int s, const kl_guard* guard, kl_complex** out);
KL_API kl_status kl_complex_subdivide(const kl_complex* k, const kl_guard* guard, kl_complex** out);
KL_API kl_status kl_complex_parse(const char* text, kl_complex** out);
KL_API kl_status kl_complex_serialize(const kl_complex* k, char** out);
KL_API int kl_complex_dim(const kl_complex* k);
KL_API size_t kl_complex_face_count(const kl_complex* k);
/* KL_INVALID_ARGUMENT when no cyclic shift is attached. */
KL_API kl_status kl_complex_action(const kl_complex* k, int r, kl_action* out);
KL_API void kl_complex_free(kl_complex* k);

/* betti_tsv (nullable) receives the `dim<TAB>betti` table. */
KL_API kl_status kl_homology(const kl_complex* k, int p, const kl_guard* guard, kl_betti_summary* summary,
                             char** betti_tsv);
/* applicable is 0 when r is not a prime power; bound and connectivity are then untouched. */
KL_API kl_status kl_topo_bound(const kl_hypergraph* h, const kl_guard* guard, int* applicable, int* bound,
                               int* connectivity);

/* ---- proof-map checks ---- */
/* report receives key<TAB>value lines; pass is 1 when every check holds. */
KL_API kl_status kl_verify_colour_map(const kl_hypergraph* h, const int* colours, size_t len, const kl_guard* guard,
                                      char** report, int* pass);
/* argument_pass omits the surjectivity check, all_pass includes it. */
KL_API kl_status kl_verify_defect_map(const kl_set_system* t, int r, int s, const kl_guard* guard, char** report,
                                      int* argument_pass, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif

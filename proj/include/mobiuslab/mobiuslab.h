#ifndef MOBIUSLAB_H
#define MOBIUSLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(MOBIUSLAB_BUILDING)
#define MOBIUSLAB_API __attribute__((visibility("default")))
#else
#define MOBIUSLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns one of these; MOBIUSLAB_OK is zero. On failure
 * mobiuslab_last_error() describes the problem for the calling thread. */
typedef enum mobiuslab_status {
  MOBIUSLAB_OK = 0,
  MOBIUSLAB_INVALID_ARGUMENT = 1,
  MOBIUSLAB_PARSE = 2,
  MOBIUSLAB_UNKNOWN_LABEL = 3,
  MOBIUSLAB_DUPLICATE_LABEL = 4,
  MOBIUSLAB_CYCLE = 5,
  MOBIUSLAB_NOT_A_LATTICE = 6,
  MOBIUSLAB_NOT_RANKED = 7,
  MOBIUSLAB_SIZE_GUARD = 8,
  MOBIUSLAB_PRECONDITION = 9,
  MOBIUSLAB_INTERNAL = 10
} mobiuslab_status;

typedef struct mobiuslab_poset mobiuslab_poset;
typedef struct mobiuslab_graph mobiuslab_graph;
typedef struct mobiuslab_tree mobiuslab_tree;

MOBIUSLAB_API const char* mobiuslab_version(void);
MOBIUSLAB_API const char* mobiuslab_status_name(int status);
/* Message of the last failed call on this thread; "" when none. */
MOBIUSLAB_API const char* mobiuslab_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
MOBIUSLAB_API void mobiuslab_string_free(char* s);

/* Posets. Labels are UTF-8 strings; JSON is {"elements": [...], "covers": [[a, b], ...]}. */
MOBIUSLAB_API int mobiuslab_poset_from_json(const char* json, mobiuslab_poset** out);
MOBIUSLAB_API int mobiuslab_poset_from_file(const char* path, mobiuslab_poset** out);
/* "boolean:3", "chain:4", "divisor:12", "subspace:2:3", "partition:4",
 * "antichain:2", "contraction:cycle:4". */
MOBIUSLAB_API int mobiuslab_poset_named(const char* spec, mobiuslab_poset** out);
MOBIUSLAB_API int mobiuslab_poset_random(size_t n, double density, uint64_t seed, mobiuslab_poset** out);
MOBIUSLAB_API void mobiuslab_poset_free(mobiuslab_poset* p);
MOBIUSLAB_API size_t mobiuslab_poset_size(const mobiuslab_poset* p);
MOBIUSLAB_API int mobiuslab_poset_to_json(const mobiuslab_poset* p, char** out);

/* mu(a, b) as a decimal string. */
MOBIUSLAB_API int mobiuslab_mobius(const mobiuslab_poset* p, const char* a, const char* b, char** out);
/* Moebius number of the poset with bounds adjoined, decimal. */
MOBIUSLAB_API int mobiuslab_mobius_number(const mobiuslab_poset* p, char** out);

/* {"labels": [...], "matrix": [[...]]}. kind is "zeta", "mobius" or
 * "zeta_power" (uses m). */
MOBIUSLAB_API int mobiuslab_matrix(const mobiuslab_poset* p, const char* kind, unsigned m, char** out);

/* Moebius inversion of a label -> integer map. direction "up" inverts sums
 * over x >= a, "down" over x <= a; sums=1 computes the sums instead. */
MOBIUSLAB_API int mobiuslab_invert(const mobiuslab_poset* p, const char* function_json, const char* direction,
                                   int sums, char** out);

/* Chains between two labels: counts by length, signed sum and mu. */
MOBIUSLAB_API int mobiuslab_chains(const mobiuslab_poset* p, const char* a, const char* b, char** out);

/* Order complex: face counts, Euler characteristic and 1 + Moebius number. */
MOBIUSLAB_API int mobiuslab_euler(const mobiuslab_poset* p, char** out);

/* Lattice properties: atoms, ranks, semimodular, geometric, modular, ... */
MOBIUSLAB_API int mobiuslab_lattice_check(const mobiuslab_poset* p, char** out);

/* Reports {identity, lhs, rhs, pass, witnesses, details}. A NULL label runs
 * every admissible element. */
MOBIUSLAB_API int mobiuslab_weisner(const mobiuslab_poset* p, const char* a, char** out);
/* labels_json: JSON array of labels, or NULL for the atoms. */
MOBIUSLAB_API int mobiuslab_cutset(const mobiuslab_poset* p, const char* labels_json, char** out);

/* {"W": [...], "w": [...]} rank counts and signed Whitney sums. */
MOBIUSLAB_API int mobiuslab_whitney(const mobiuslab_poset* p, char** out);
/* {"coefficients": [...ascending], "polynomial": "..."}. */
MOBIUSLAB_API int mobiuslab_charpoly(const mobiuslab_poset* p, char** out);

/* Graphs: edge-list text "u v" per line, optional "# vertices N". */
MOBIUSLAB_API int mobiuslab_graph_from_edge_list(const char* text, mobiuslab_graph** out);
/* "complete:4", "cycle:5", "path:3", "star:3", "empty:2". */
MOBIUSLAB_API int mobiuslab_graph_named(const char* spec, mobiuslab_graph** out);
MOBIUSLAB_API int mobiuslab_graph_random(size_t n, double density, uint64_t seed, mobiuslab_graph** out);
MOBIUSLAB_API void mobiuslab_graph_free(mobiuslab_graph* g);
MOBIUSLAB_API int mobiuslab_graph_to_edge_list(const mobiuslab_graph* g, char** out);
/* Chromatic polynomial via the contraction lattice; evaluations at 0..k. */
MOBIUSLAB_API int mobiuslab_chromatic(const mobiuslab_graph* g, unsigned evaluate_up_to, char** out);
/* Contraction lattice of the graph as a poset. */
MOBIUSLAB_API int mobiuslab_graph_contraction_lattice(const mobiuslab_graph* g, mobiuslab_poset** out);

/* Trees: {"n": n, "root": r, "parent": [...]} or a graph plus root. */
MOBIUSLAB_API int mobiuslab_tree_from_json(const char* json, mobiuslab_tree** out);
MOBIUSLAB_API int mobiuslab_tree_from_graph(const mobiuslab_graph* g, size_t root, mobiuslab_tree** out);
MOBIUSLAB_API int mobiuslab_tree_random(size_t n, uint64_t seed, mobiuslab_tree** out);
MOBIUSLAB_API void mobiuslab_tree_free(mobiuslab_tree* t);
/* what: "det" ({det, closed_form, pass}), "distance", "zeta", "inverse",
 * "factorization", "check" (every identity), "json" (parent-array form). */
MOBIUSLAB_API int mobiuslab_tree_report(const mobiuslab_tree* t, const char* what, char** out);

/* Null designs on a meet semilattice. function_json is a label -> integer
 * map; b may be NULL. Reports strength, the restriction f_b by both routes
 * when b is given, and the support bound check. */
MOBIUSLAB_API int mobiuslab_null_design(const mobiuslab_poset* p, const char* function_json, const char* b,
                                        char** out);
/* sum_{c <= b} |mu(c,b)| for one label, or every element when b is NULL. */
MOBIUSLAB_API int mobiuslab_support_bound(const mobiuslab_poset* p, const char* b, char** out);

/* Verification suite. size is "small" or "full"; ids_json a JSON array of
 * item ids or NULL for all. Output {"items": [...], "passed": k, "total": n}. */
MOBIUSLAB_API int mobiuslab_verify(const char* size, uint64_t seed, const char* ids_json, char** out);
/* [{"id": 1, "name": "..."}, ...]. */
MOBIUSLAB_API int mobiuslab_verify_list(char** out);

#ifdef __cplusplus
}
#endif

#endif

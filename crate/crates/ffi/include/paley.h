#ifndef PALEY_FFI_H
#define PALEY_FFI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PaleyStatus {
  PALEY_STATUS_OK = 0,
  PALEY_STATUS_INVALID_INPUT = 1,
  PALEY_STATUS_NOT_ADMISSIBLE = 2,
  PALEY_STATUS_CONSISTENCY = 3,
  PALEY_STATUS_CEILING_EXCEEDED = 4,
  /**
   * The value does not fit the output type; use the decimal variant.
   */
  PALEY_STATUS_OVERFLOW = 5,
  PALEY_STATUS_NULL_POINTER = 6,
  PALEY_STATUS_PANIC = 7,
} PaleyStatus;

typedef enum PaleyMethod {
  PALEY_METHOD_BRUTEFORCE = 0,
  PALEY_METHOD_REDUCTION = 1,
  PALEY_METHOD_FORMULA = 2,
} PaleyMethod;

/**
 * Opaque graph handle.
 */
typedef struct PaleyGraph PaleyGraph;

/**
 * Summary of a validated modulus.
 */
typedef struct PaleyModulusInfo {
  uint64_t n;
  /**
   * Exponent of 2 in n (0 or 1).
   */
  uint32_t s;
  /**
   * Number of distinct odd primes.
   */
  uint32_t k;
  uint64_t phi;
  /**
   * |R_n| = phi(n) / 2^k.
   */
  uint64_t square_count;
} PaleyModulusInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *paley_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void paley_string_free(char *s);

/**
 * Validates `n`. `out` may be NULL when only the status is wanted.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one `PaleyModulusInfo`.
 */
enum PaleyStatus paley_check_admissible(uint64_t n, struct PaleyModulusInfo *out);

/**
 * Builds `G_n`. On success `*out` owns a handle for [`paley_graph_free`].
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum PaleyStatus paley_graph_new(uint64_t n, struct PaleyGraph **out);

/**
 * # Safety
 * `graph` must be NULL or a handle from [`paley_graph_new`], not yet freed.
 */
void paley_graph_free(struct PaleyGraph *graph);

/**
 * Number of vertices; 0 for a NULL handle.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
uint64_t paley_graph_order(const struct PaleyGraph *graph);

/**
 * Common vertex degree |R_n|; 0 for a NULL handle.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
uint64_t paley_graph_degree(const struct PaleyGraph *graph);

/**
 * Whether `x - y` is a unit square mod n. False for NULL or out-of-range vertices.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
bool paley_graph_is_adjacent(const struct PaleyGraph *graph, uint64_t x, uint64_t y);

/**
 * Writes the edge list ("u v\n" per edge, u < v) to `path`.
 *
 * # Safety
 * `graph` must be a live handle and `path` a NUL-terminated string.
 */
enum PaleyStatus paley_graph_write_edges(const struct PaleyGraph *graph, const char *path);

/**
 * Counts cliques of order 3 or 4. Returns `Overflow` if the count exceeds
 * `uint64_t`; use [`paley_count_cliques_decimal`] then.
 *
 * # Safety
 * `graph` must be a live handle; `out` must point to one writable `uint64_t`.
 */
enum PaleyStatus paley_count_cliques(const struct PaleyGraph *graph,
                                     uint32_t order,
                                     enum PaleyMethod method,
                                     uint64_t *out);

/**
 * Like [`paley_count_cliques`] but returns the count as a decimal string
 * (free with [`paley_string_free`]). Returns NULL on failure and sets
 * `*status` when `status` is not NULL.
 *
 * # Safety
 * `graph` must be a live handle; `status` must be NULL or writable.
 */
char *paley_count_cliques_decimal(const struct PaleyGraph *graph,
                                  uint32_t order,
                                  enum PaleyMethod method,
                                  enum PaleyStatus *status);

/**
 * `J(psi, chi) = x + iy` mod `p^alpha`, with psi sending the smallest
 * primitive root to i.
 *
 * # Safety
 * `x` and `y` must each point to one writable `int64_t`.
 */
enum PaleyStatus paley_jacobi_sum(uint64_t p, uint32_t alpha, int64_t *x, int64_t *y);

/**
 * Checks `2(x^2 - y^2) = 2 p^(2 alpha - 2) (p - 2a^2)`; `*ok` receives the verdict.
 *
 * # Safety
 * `ok` must point to one writable `bool`.
 */
enum PaleyStatus paley_verify_xyreln(uint64_t p, uint32_t alpha, bool *ok);

/**
 * True iff `G_n` has no 4-cliques, decided from the factorization alone.
 *
 * # Safety
 * `out` must point to one writable `bool`.
 */
enum PaleyStatus paley_k4_is_zero(uint64_t n, bool *out);

/**
 * Runs the reference-table suite and returns its JSON report (free with
 * [`paley_string_free`]). `*all_pass` receives the overall verdict.
 *
 * # Safety
 * `json` must point to one writable pointer; `all_pass` must be NULL or writable.
 */
enum PaleyStatus paley_verify_tables_json(char **json, bool *all_pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PALEY_FFI_H */

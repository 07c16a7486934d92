#ifndef KLOC_H
#define KLOC_H

/* This file is generated by cbindgen from kloc-capi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Search algorithm selector.
 */
typedef enum {
  /**
   * Exhaustive enumeration of all palette permutations.
   */
  KLOC_ALGORITHM_NAIVE = 0,
  /**
   * Best-first prefix search returning all optimal sequences.
   */
  KLOC_ALGORITHM_PRIORITY = 1,
  /**
   * Best-first prefix search stopping at one optimal sequence.
   */
  KLOC_ALGORITHM_PRIORITY_STAR = 2,
} KlocAlgorithm;

/**
 * Status codes returned by the fallible entry points.
 */
typedef enum {
  KLOC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  KLOC_STATUS_NULL_ARGUMENT = 1,
  /**
   * Arguments were structurally invalid (mismatched sizes, bad ids).
   */
  KLOC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Text input failed to parse.
   */
  KLOC_STATUS_PARSE_ERROR = 3,
  /**
   * The requested computation exceeds a configured cap.
   */
  KLOC_STATUS_TOO_LARGE = 4,
  /**
   * The search hit the supplied timeout.
   */
  KLOC_STATUS_TIMEOUT = 5,
} KlocStatus;

/**
 * Opaque vertex colouring, tied to the vertex count it was built for.
 */
typedef struct KlocColouring KlocColouring;

/**
 * Opaque undirected simple graph.
 */
typedef struct KlocGraph KlocGraph;

/**
 * Opaque solver result.
 */
typedef struct KlocResult KlocResult;

/**
 * Message describing the most recent error on this thread. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *kloc_last_error(void);

/**
 * Library version as a static string.
 */
const char *kloc_version(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs laid out as
 * `u0 v0 u1 v1 ...`. On success stores a handle in `out`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable `uint32_t`s (or be null
 * when `edge_count` is 0); `out` must be a valid pointer.
 */
KlocStatus kloc_graph_new(size_t n, const uint32_t *edges, size_t edge_count, KlocGraph **out);

/**
 * Parses the graph text format (`n m` header plus `u v` edge lines).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid.
 */
KlocStatus kloc_graph_parse(const char *text, KlocGraph **out);

/**
 * Number of vertices.
 *
 * # Safety
 * `graph` must be a live handle from this library.
 */
size_t kloc_graph_vertex_count(const KlocGraph *graph);

/**
 * Number of edges.
 *
 * # Safety
 * `graph` must be a live handle from this library.
 */
size_t kloc_graph_edge_count(const KlocGraph *graph);

/**
 * # Safety
 * `graph` must be null or a handle obtained from this library, not yet
 * freed.
 */
void kloc_graph_free(KlocGraph *graph);

/**
 * Builds a colouring for `graph` from one positive colour id per vertex.
 *
 * # Safety
 * `colours` must point to `kloc_graph_vertex_count(graph)` readable
 * `uint32_t`s; `graph` and `out` must be valid.
 */
KlocStatus kloc_colouring_new(const KlocGraph *graph, const uint32_t *colours, KlocColouring **out);

/**
 * Parses the colouring text format (`v colour_id` lines) for `graph`.
 *
 * # Safety
 * `graph` must be a live handle, `text` a valid NUL-terminated string,
 * `out` a valid pointer.
 */
KlocStatus kloc_colouring_parse(const KlocGraph *graph, const char *text, KlocColouring **out);

/**
 * # Safety
 * `colouring` must be null or a handle obtained from this library, not
 * yet freed.
 */
void kloc_colouring_free(KlocColouring *colouring);

/**
 * Runs the selected search. `timeout_ms` of 0 means no timeout. On
 * success stores a result handle in `out`.
 *
 * # Safety
 * `graph`, `colouring` and `out` must be valid; the colouring must have
 * been built for a graph with the same vertex count.
 */
KlocStatus kloc_solve(const KlocGraph *graph,
                      const KlocColouring *colouring,
                      KlocAlgorithm algorithm,
                      uint64_t timeout_ms,
                      KlocResult **out);

/**
 * Evaluates one marking sequence (a permutation of the palette); writes
 * the maximum component count to `out_k`.
 *
 * # Safety
 * `sequence` must point to `sequence_len` readable `uint32_t`s; all
 * handles and `out_k` must be valid.
 */
KlocStatus kloc_evaluate_sequence(const KlocGraph *graph,
                                  const KlocColouring *colouring,
                                  const uint32_t *sequence,
                                  size_t sequence_len,
                                  size_t *out_k);

/**
 * Decides whether the locality is at most `k`; writes 1 or 0 to `out`.
 *
 * # Safety
 * All handles and `out` must be valid.
 */
KlocStatus kloc_decide(const KlocGraph *graph,
                       const KlocColouring *colouring,
                       size_t k,
                       int32_t *out);

/**
 * Minimum locality of a solved instance.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
size_t kloc_result_min_k(const KlocResult *result);

/**
 * Number of optimal sequences carried by the result.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
size_t kloc_result_sequence_count(const KlocResult *result);

/**
 * Copies sequence `index` into `buffer` (up to `capacity` colours) and
 * returns its full length, or -1 when the index is out of range.
 *
 * # Safety
 * `result` must be live; `buffer` must point to `capacity` writable
 * `uint32_t`s (or be null with capacity 0).
 */
ptrdiff_t kloc_result_sequence(const KlocResult *result,
                               size_t index,
                               uint32_t *buffer,
                               size_t capacity);

/**
 * Queue pops that expanded children during the search.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uint64_t kloc_result_expansions(const KlocResult *result);

/**
 * Component counts performed during the search.
 *
 * # Safety
 * `result` must be a live handle from this library.
 */
uint64_t kloc_result_evaluations(const KlocResult *result);

/**
 * # Safety
 * `result` must be null or a handle obtained from this library, not yet
 * freed.
 */
void kloc_result_free(KlocResult *result);

#endif  /* KLOC_H */

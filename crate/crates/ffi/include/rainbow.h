#ifndef RAINBOW_H
#define RAINBOW_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first five match the `rainbow` command's exit codes.
 */
typedef enum RainbowStatus {
  RAINBOW_STATUS_OK = 0,
  RAINBOW_STATUS_COUNTEREXAMPLE_FOUND = 1,
  RAINBOW_STATUS_INVALID_ARGUMENT = 2,
  RAINBOW_STATUS_UNDEFINED = 3,
  RAINBOW_STATUS_BUDGET_EXCEEDED = 4,
  RAINBOW_STATUS_NULL_POINTER = 5,
  RAINBOW_STATUS_PANIC = 6,
} RainbowStatus;

/**
 * Opaque colouring handle; colours are listed in the graph's edge order.
 */
typedef struct RainbowColouring RainbowColouring;

/**
 * Opaque graph handle.
 */
typedef struct RainbowGraph RainbowGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread. Owned by the
 * library; valid until the next failing call on the same thread.
 */
const char *rainbow_last_error(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0); `out_graph` must be writable.
 */
enum RainbowStatus rainbow_graph_new(size_t n,
                                     const size_t *edges,
                                     size_t edge_count,
                                     struct RainbowGraph **out_graph);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out_graph` must be writable.
 */
enum RainbowStatus rainbow_graph_from_graph6(const char *text, struct RainbowGraph **out_graph);

/**
 * The graph6 encoding, as a string to release with [`rainbow_string_free`].
 *
 * # Safety
 * `graph` must be a live handle; `out_text` must be writable.
 */
enum RainbowStatus rainbow_graph_to_graph6(const struct RainbowGraph *graph, char **out_text);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t rainbow_graph_vertex_count(const struct RainbowGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t rainbow_graph_edge_count(const struct RainbowGraph *graph);

/**
 * Writes edge `index` (with `u < v`).
 *
 * # Safety
 * `graph` must be a live handle; `u` and `v` must be writable.
 */
enum RainbowStatus rainbow_graph_edge(const struct RainbowGraph *graph,
                                      size_t index,
                                      size_t *u,
                                      size_t *v);

/**
 * # Safety
 * `graph` must be a handle from this library, not yet freed, or null.
 */
void rainbow_graph_free(struct RainbowGraph *graph);

/**
 * # Safety
 * `text` must come from this library, not yet freed, or be null.
 */
void rainbow_string_free(char *text);

/**
 * A colouring of `graph` with colours in `1..=colour_count`, one per edge
 * in edge order.
 *
 * # Safety
 * `graph` must be live; `colours` must hold `len` values; `out_colouring`
 * must be writable.
 */
enum RainbowStatus rainbow_colouring_new(const struct RainbowGraph *graph,
                                         const uint32_t *colours,
                                         size_t len,
                                         uint32_t colour_count,
                                         struct RainbowColouring **out_colouring);

/**
 * # Safety
 * `colouring` must be a live handle or null.
 */
size_t rainbow_colouring_len(const struct RainbowColouring *colouring);

/**
 * # Safety
 * `colouring` must be a live handle or null.
 */
uint32_t rainbow_colouring_colour_count(const struct RainbowColouring *colouring);

/**
 * Copies the colours into `buffer`, which must hold the colouring's length.
 *
 * # Safety
 * `colouring` must be live; `buffer` must be writable for `len` values.
 */
enum RainbowStatus rainbow_colouring_get(const struct RainbowColouring *colouring,
                                         uint32_t *buffer,
                                         size_t len);

/**
 * # Safety
 * `colouring` must be a handle from this library, not yet freed, or null.
 */
void rainbow_colouring_free(struct RainbowColouring *colouring);

/**
 * Builds a construction by family name (for example "GNR", "g1"). Pass 0
 * for `r` or `k` when the family takes no such parameter. Uncoloured
 * families set `*out_colouring` to null.
 *
 * # Safety
 * `family` must be NUL-terminated; both out pointers must be writable.
 */
enum RainbowStatus rainbow_construct(const char *family,
                                     size_t n,
                                     size_t r,
                                     size_t k,
                                     struct RainbowGraph **out_graph,
                                     struct RainbowColouring **out_colouring);

/**
 * Checks rainbow k-connectivity. Returns `Ok` when connected, or
 * `CounterexampleFound` with the first failing pair in `fail_u`, `fail_v`
 * (either may be null).
 *
 * # Safety
 * Handles must be live; non-null out pointers must be writable.
 */
enum RainbowStatus rainbow_verify(const struct RainbowGraph *graph,
                                  const struct RainbowColouring *colouring,
                                  size_t k,
                                  size_t *fail_u,
                                  size_t *fail_v);

/**
 * Exact rc_k with an optimal colouring. `node_budget` 0 means unlimited.
 *
 * # Safety
 * `graph` must be live; `out_rc` must be writable; `out_witness` may be
 * null when the colouring is not wanted.
 */
enum RainbowStatus rainbow_rc_exact(const struct RainbowGraph *graph,
                                    size_t k,
                                    uint64_t node_budget,
                                    uint32_t *out_rc,
                                    struct RainbowColouring **out_witness);

/**
 * t_k(n, r) (`kind` = 't') or s_k(n, r) (`kind` = 's') by exhaustive
 * enumeration, with a witness graph when `out_witness` is non-null.
 * Returns `Undefined` when no graph qualifies.
 *
 * # Safety
 * `out_value` must be writable; `out_witness` may be null.
 */
enum RainbowStatus rainbow_extremal(char kind,
                                    size_t k,
                                    size_t n,
                                    uint32_t r,
                                    size_t *out_value,
                                    struct RainbowGraph **out_witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAINBOW_H */

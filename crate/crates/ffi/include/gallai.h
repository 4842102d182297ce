#ifndef GALLAI_H
#define GALLAI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GallaiMode {
  GALLAI_MODE_CONSTRUCTIVE = 0,
  GALLAI_MODE_SOLVER = 1,
  GALLAI_MODE_BOTH = 2,
} GallaiMode;

typedef enum GallaiStatus {
  GALLAI_STATUS_OK = 0,
  GALLAI_STATUS_NULL_POINTER = 1,
  GALLAI_STATUS_INVALID_ARGUMENT = 2,
  GALLAI_STATUS_PARSE = 3,
  GALLAI_STATUS_CAP_EXCEEDED = 4,
  /**
   * A checked claim did not hold.
   */
  GALLAI_STATUS_FALSIFICATION = 5,
  GALLAI_STATUS_INTERNAL = 6,
  GALLAI_STATUS_PANIC = 7,
} GallaiStatus;

/**
 * Opaque graph handle.
 */
typedef struct GallaiGraphHandle GallaiGraphHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-OK status on this thread, or an empty string.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *gallai_last_error_message(void);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum GallaiStatus gallai_graph_from_graph6(const char *text, struct GallaiGraphHandle **out);

/**
 * Builds `H_n`; vertex `(i, j)` has index `3i + j`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GallaiStatus gallai_build_h(size_t n, struct GallaiGraphHandle **out);

/**
 * # Safety
 * `h` must be null or a handle from this library that was not freed yet.
 */
void gallai_graph_free(struct GallaiGraphHandle *h);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void gallai_string_free(char *s);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_graph_vertex_count(const struct GallaiGraphHandle *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_graph_edge_count(const struct GallaiGraphHandle *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_graph_to_graph6(const struct GallaiGraphHandle *h, char **out);

/**
 * Replicates the vertices whose bits are set in `mask`. The clone of the
 * k-th smallest replicated vertex gets index `vertex_count + k`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_replicate(const struct GallaiGraphHandle *h,
                                   uint64_t mask,
                                   struct GallaiGraphHandle **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_chromatic_number(const struct GallaiGraphHandle *h, uint32_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_is_k_colorable(const struct GallaiGraphHandle *h, uint32_t k, bool *out);

/**
 * Criticality report as JSON. `edges` adds per-edge chromatic numbers.
 *
 * # Safety
 * `h` must be a live handle; `json_out` must be writable.
 */
enum GallaiStatus gallai_criticality(const struct GallaiGraphHandle *h,
                                     uint32_t k,
                                     bool edges,
                                     char **json_out);

/**
 * Fractional chromatic number as `"p/q"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum GallaiStatus gallai_fractional_chromatic_number(const struct GallaiGraphHandle *h, char **out);

/**
 * Classifies a sign sequence written over `+`, `-`, `0`.
 *
 * # Safety
 * `sigma` must be a nul-terminated string; `good` and `reversing` writable.
 */
enum GallaiStatus gallai_classify_sequence(const char *sigma, bool *good, bool *reversing);

/**
 * Exhaustive theorem check on `H_n` (n at most 6). Writes the JSON report
 * and the pass flag; a failed check still returns `GALLAI_STATUS_OK`.
 *
 * # Safety
 * `json_out` and `pass` must be writable.
 */
enum GallaiStatus gallai_verify_theorem(size_t n,
                                        enum GallaiMode mode,
                                        uint64_t seed,
                                        char **json_out,
                                        bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GALLAI_H */

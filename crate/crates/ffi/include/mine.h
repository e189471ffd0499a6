#ifndef MINE_H
#define MINE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MineMethod {
  MINE_METHOD_BRUTE = 0,
  MINE_METHOD_ELIM = 1,
  MINE_METHOD_TREE = 2,
  MINE_METHOD_MINCUT = 3,
  MINE_METHOD_ALPHAEXP = 4,
} MineMethod;

/**
 * Result of every fallible call.
 */
typedef enum MineStatus {
  MINE_STATUS_OK = 0,
  /**
   * Null pointer, invalid UTF-8 or an out-of-range enum value.
   */
  MINE_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed text or an inconsistent instance.
   */
  MINE_STATUS_PARSE = 2,
  /**
   * Valid input outside what the operation accepts.
   */
  MINE_STATUS_PRECONDITION = 3,
  /**
   * A labeling or trace does not fit the instance.
   */
  MINE_STATUS_VERIFICATION = 4,
  /**
   * A panic was caught at the boundary.
   */
  MINE_STATUS_INTERNAL = 5,
} MineStatus;

/**
 * An energy instance with its optional straight-line drawing.
 */
typedef struct MineInstance MineInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *mine_last_error(void);

/**
 * Parses an instance file.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MineStatus mine_instance_parse(const char *text, struct MineInstance **out);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `instance` must come from this library and not be used afterwards.
 */
void mine_instance_free(struct MineInstance *instance);

/**
 * Number of nodes, or 0 for NULL.
 *
 * # Safety
 * `instance` must be NULL or a live handle.
 */
size_t mine_instance_num_nodes(const struct MineInstance *instance);

/**
 * Canonical text of the instance and its drawing.
 *
 * # Safety
 * `instance` must be a live handle and `out` a writable pointer.
 */
enum MineStatus mine_instance_serialize(const struct MineInstance *instance, char **out);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void mine_string_free(char *s);

/**
 * Energy of a labeling of `len` entries. `*infinite` is set for `+INF`,
 * in which case `*value` is 0.
 *
 * # Safety
 * `labels` must point to `len` readable entries; the outputs must be
 * writable.
 */
enum MineStatus mine_evaluate(const struct MineInstance *instance,
                              const size_t *labels,
                              size_t len,
                              int64_t *value,
                              bool *infinite);

/**
 * Minimizes with `method` (a `MineMethod` value) and writes one label per node into `labels_out`,
 * which must hold `len ≥ num_nodes` entries.
 *
 * # Safety
 * `labels_out` must point to `len` writable entries; the outputs must be
 * writable.
 */
enum MineStatus mine_solve(const struct MineInstance *instance,
                           uint32_t method,
                           size_t *labels_out,
                           size_t len,
                           int64_t *value,
                           bool *infinite);

/**
 * Complexity report as JSON.
 *
 * # Safety
 * `instance` must be a live handle and `out` a writable pointer.
 */
enum MineStatus mine_classify_json(const struct MineInstance *instance, char **out);

/**
 * Binary instance of a weighted 3-SAT formula given in wcnf3 text.
 *
 * # Safety
 * `wcnf3` must be a NUL-terminated string and `out` a writable pointer.
 */
enum MineStatus mine_reduce_w3sat_to_qpbo(const char *wcnf3, struct MineInstance **out);

/**
 * `k`-label instance embedding a finite binary instance.
 *
 * # Safety
 * `instance` must be a live handle and `out` a writable pointer.
 */
enum MineStatus mine_reduce_qpbo_to_klabel(const struct MineInstance *instance,
                                           size_t k,
                                           struct MineInstance **out);

/**
 * Crossing-free 3-label instance with its drawing; the input must carry
 * a drawing in general position.
 *
 * # Safety
 * `instance` must be a live handle and `out` a writable pointer.
 */
enum MineStatus mine_reduce_planarize(const struct MineInstance *instance,
                                      struct MineInstance **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINE_H */

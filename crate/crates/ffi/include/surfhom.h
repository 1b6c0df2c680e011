#ifndef SURFHOM_H
#define SURFHOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SurfhomStatus {
  SURFHOM_STATUS_OK = 0,
  SURFHOM_STATUS_NULL_POINTER = 1,
  SURFHOM_STATUS_INVALID_ARGUMENT = 2,
  SURFHOM_STATUS_PARSE = 3,
  SURFHOM_STATUS_BUDGET_EXCEEDED = 4,
  SURFHOM_STATUS_INTERNAL = 5,
  SURFHOM_STATUS_PANIC = 6,
} SurfhomStatus;

/**
 * A finite permutation group with its lazily computed character table.
 */
typedef struct SurfhomGroup SurfhomGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *surfhom_last_error(void);

/**
 * Library version as a static string.
 */
const char *surfhom_version(void);

/**
 * Builds a group from a spec string such as `builtin:sym:4`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum SurfhomStatus surfhom_group_new(const char *spec, struct SurfhomGroup **out);

/**
 * Releases a group handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from `surfhom_group_new` and not be used afterwards.
 */
void surfhom_group_free(struct SurfhomGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SurfhomStatus surfhom_group_order(const struct SurfhomGroup *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SurfhomStatus surfhom_group_class_count(const struct SurfhomGroup *g, uint64_t *out);

/**
 * Homomorphisms from a closed surface group: orientable of genus `genus`,
 * or nonorientable with `genus` crosscaps.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SurfhomStatus surfhom_count_closed(const struct SurfhomGroup *g,
                                        bool orientable,
                                        uint32_t genus,
                                        char **out);

/**
 * As `surfhom_count_closed`, with boundary circles in the classes
 * `classes[0..n]` (canonical class indices).
 *
 * # Safety
 * `g` must be a live handle, `classes` must point to `n` values when
 * `n > 0`, and `out` must be writable.
 */
enum SurfhomStatus surfhom_count_bounded(const struct SurfhomGroup *g,
                                         bool orientable,
                                         uint32_t genus,
                                         const size_t *classes,
                                         size_t n,
                                         char **out);

/**
 * Solutions of `γ(g) c_1 ⋯ c_n = 1` for a word of the given rank, by the
 * character formula. Unrecognized word shapes use enumeration limited to
 * `max_tuples` assignments.
 *
 * # Safety
 * Pointer arguments as for `surfhom_count_bounded`; `word` must be a
 * NUL-terminated string.
 */
enum SurfhomStatus surfhom_count_word(const struct SurfhomGroup *g,
                                      const char *word,
                                      uint32_t rank,
                                      const size_t *classes,
                                      size_t n,
                                      uint64_t max_tuples,
                                      char **out);

/**
 * Brute-force count of `γ(g) c_1 ⋯ c_n = 1` over `G^rank × ΠC_i`.
 *
 * # Safety
 * As for `surfhom_count_word`.
 */
enum SurfhomStatus surfhom_oracle_count(const struct SurfhomGroup *g,
                                        const char *word,
                                        uint32_t rank,
                                        const size_t *classes,
                                        size_t n,
                                        uint64_t max_tuples,
                                        uint32_t workers,
                                        char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void surfhom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURFHOM_H */

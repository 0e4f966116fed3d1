#ifndef PLETHYSM_H
#define PLETHYSM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlethysmStatus {
  PLETHYSM_STATUS_OK = 0,
  PLETHYSM_STATUS_NULL_POINTER = 1,
  PLETHYSM_STATUS_INVALID_UTF8 = 2,
  PLETHYSM_STATUS_PARSE_ERROR = 3,
  PLETHYSM_STATUS_INVALID_ARGUMENT = 4,
  PLETHYSM_STATUS_VERIFICATION_FAILED = 5,
  PLETHYSM_STATUS_INTERNAL = 6,
} PlethysmStatus;

/**
 * Opaque engine handle. Holds the memo tables; safe to share across
 * threads.
 */
typedef struct PlethysmEngine PlethysmEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates an engine. Release it with [`plethysm_engine_free`].
 */
struct PlethysmEngine *plethysm_engine_new(void);

/**
 * # Safety
 * `engine` must come from [`plethysm_engine_new`] and not be used again.
 */
void plethysm_engine_free(struct PlethysmEngine *engine);

/**
 * `a^ν_{λ,μ}` as a decimal string in `*out`. `nu` and `lambda` may be skew
 * shapes.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings, `out` writable.
 */
enum PlethysmStatus plethysm_coefficient(const struct PlethysmEngine *engine,
                                         const char *nu,
                                         const char *lambda,
                                         const char *mu,
                                         char **out);

/**
 * Littlewood–Richardson coefficient `c^ν_{λ,μ}`.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings, `out` writable.
 */
enum PlethysmStatus plethysm_lr_coefficient(const struct PlethysmEngine *engine,
                                            const char *nu,
                                            const char *lambda,
                                            const char *mu,
                                            uint64_t *out);

/**
 * Schur expansion of `s_λ ∘ s_μ` as a JSON object from partition text to
 * integer coefficient.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings, `out` writable.
 */
enum PlethysmStatus plethysm_expansion(const struct PlethysmEngine *engine,
                                       const char *lambda,
                                       const char *mu,
                                       char **out);

/**
 * Stability sequence report for `(σ, τ, l, m)` over `j = 0..=j_max`, as
 * JSON.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings, `out` writable.
 */
enum PlethysmStatus plethysm_sequence(const struct PlethysmEngine *engine,
                                      const char *sigma,
                                      const char *tau,
                                      size_t l,
                                      size_t m,
                                      size_t j_max,
                                      size_t window,
                                      char **out);

/**
 * Description of the last failure on this thread, or null after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *plethysm_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void plethysm_string_free(char *s);

/**
 * Engine version tag, statically allocated.
 */
const char *plethysm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLETHYSM_H */

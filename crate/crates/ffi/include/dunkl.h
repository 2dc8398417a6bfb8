#ifndef DUNKL_H
#define DUNKL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DunklStatus {
  DUNKL_STATUS_OK = 0,
  DUNKL_STATUS_NULL_POINTER = 1,
  DUNKL_STATUS_INVALID_UTF8 = 2,
  DUNKL_STATUS_PARSE = 3,
  DUNKL_STATUS_INVALID_SYSTEM = 4,
  DUNKL_STATUS_INVALID_ARGUMENT = 5,
  DUNKL_STATUS_NOT_Z2D = 6,
  DUNKL_STATUS_NUMERIC = 7,
  DUNKL_STATUS_INTERNAL = 8,
  DUNKL_STATUS_PANIC = 9,
} DunklStatus;

/**
 * Root system with multiplicities and operator caches.
 */
typedef struct DunklContext DunklContext;

/**
 * Polynomial with exact rational coefficients.
 */
typedef struct DunklPoly DunklPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *dunkl_last_error(void);

/**
 * Library version as a static string.
 */
const char *dunkl_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void dunkl_string_free(char *s);

/**
 * Builds a context for a catalog system (`"b:d=3"`, `"custom:file.json"`, ...)
 * with multiplicities given as a comma-separated list of rationals: one
 * value, one per orbit or one per positive root.
 *
 * # Safety
 * Strings must be NUL-terminated; `out` must be writable.
 */
enum DunklStatus dunkl_context_new(const char *system,
                                   const char *kappa,
                                   struct DunklContext **out);

/**
 * # Safety
 * `ctx` must come from [`dunkl_context_new`] and not be freed twice.
 */
void dunkl_context_free(struct DunklContext *ctx);

/**
 * Ambient dimension, or 0 for NULL.
 *
 * # Safety
 * `ctx` must be NULL or a live context.
 */
size_t dunkl_context_dim(const struct DunklContext *ctx);

/**
 * `lambda_k = gamma_k + d/2 - 1` as an exact rational string.
 *
 * # Safety
 * `ctx` must be a live context; `out` must be writable.
 */
enum DunklStatus dunkl_context_lambda(const struct DunklContext *ctx, char **out);

/**
 * Parses a polynomial in `x1..xd` for the context's dimension.
 *
 * # Safety
 * `ctx` must be a live context, `text` NUL-terminated, `out` writable.
 */
enum DunklStatus dunkl_poly_parse(const struct DunklContext *ctx,
                                  const char *text,
                                  struct DunklPoly **out);

/**
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void dunkl_poly_free(struct DunklPoly *p);

/**
 * Canonical text form; parses back to the same polynomial.
 *
 * # Safety
 * `p` must be a live polynomial; `out` must be writable.
 */
enum DunklStatus dunkl_poly_to_string(const struct DunklPoly *p, char **out);

/**
 * Returns 1 when the polynomials are equal, 0 otherwise (including NULL).
 *
 * # Safety
 * Arguments must be NULL or live polynomials.
 */
int32_t dunkl_poly_equal(const struct DunklPoly *a, const struct DunklPoly *b);

/**
 * `D_xi p`, with `xi` given as a comma-separated list of rationals.
 *
 * # Safety
 * Handles must be live, `xi` NUL-terminated, `out` writable.
 */
enum DunklStatus dunkl_apply(const struct DunklContext *ctx,
                             const char *xi,
                             const struct DunklPoly *p,
                             struct DunklPoly **out);

/**
 * Dunkl Laplacian `sum_j D_j^2 p`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum DunklStatus dunkl_laplacian(const struct DunklContext *ctx,
                                 const struct DunklPoly *p,
                                 struct DunklPoly **out);

/**
 * Projection of a homogeneous polynomial onto the k-harmonics.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum DunklStatus dunkl_project(const struct DunklContext *ctx,
                               const struct DunklPoly *p,
                               struct DunklPoly **out);

/**
 * Generalized Hermite polynomial of a homogeneous polynomial.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum DunklStatus dunkl_hermite(const struct DunklContext *ctx,
                               const struct DunklPoly *p,
                               struct DunklPoly **out);

/**
 * Normalised spherical mean against `h_k^2`, as an exact rational string.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum DunklStatus dunkl_pizzetti_mean(const struct DunklContext *ctx,
                                     const struct DunklPoly *p,
                                     char **out);

/**
 * Evaluates the Hobson identity for `p(D)` on a radial profile such as
 * `"r^3*exp(-r^2)"`; writes 1 to `out_holds` when the residual is exactly
 * zero, else 0.
 *
 * # Safety
 * Handles must be live, `profile` NUL-terminated, `out_holds` writable.
 */
enum DunklStatus dunkl_hobson_check(const struct DunklContext *ctx,
                                    const struct DunklPoly *p,
                                    const char *profile,
                                    int32_t *out_holds);

/**
 * Dunkl transform of `p(x) e^{-||x||^2/2}` at `y` (Z2^d contexts only).
 *
 * # Safety
 * Handles must be live; `y` must point to `len` doubles; outputs writable.
 */
enum DunklStatus dunkl_transform_gauss(const struct DunklContext *ctx,
                                       const struct DunklPoly *p,
                                       const double *y,
                                       size_t len,
                                       double *out_re,
                                       double *out_im);

/**
 * Runs a named verification suite and writes its JSON report. `out_passed`
 * receives 1 when no case failed.
 *
 * # Safety
 * `ctx` must be live, `suite` NUL-terminated, outputs writable.
 */
enum DunklStatus dunkl_verify(const struct DunklContext *ctx,
                              const char *suite,
                              uint64_t seed,
                              uint32_t deg,
                              size_t count,
                              char **out_json,
                              int32_t *out_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUNKL_H */

#ifndef HARMONIC_GAUSS_H
#define HARMONIC_GAUSS_H

/* Generated by cbindgen from harmonic-gauss-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct HgSurface HgSurface;

/**
 * Status codes returned by every entry point.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  HG_STATUS_PARSE_ERROR = 1,
  HG_STATUS_NOT_HARMONIC = 2,
  HG_STATUS_OUT_OF_DOMAIN = 3,
  HG_STATUS_BRANCH_POINT = 4,
  HG_STATUS_GAUSS_DEGENERATE = 5,
  HG_STATUS_NORTH_POLE = 6,
  HG_STATUS_NOT_NORMALIZED = 7,
  HG_STATUS_DEGENERATE_SURFACE = 8,
  HG_STATUS_INVALID_DISTORTION = 9,
  HG_STATUS_NULL_VIOLATION = 10,
  HG_STATUS_UNKNOWN_SUITE = 11,
  HG_STATUS_INVALID_INPUT = 12,
  HG_STATUS_NULL_POINTER = 13,
  HG_STATUS_INVALID_UTF8 = 14,
  HG_STATUS_INTERNAL_PANIC = 15,
} HgStatus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a surface JSON document into a new handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HgStatus hg_surface_from_json(const char *json, struct HgSurface **out);

/**
 * Frees a surface handle; null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer from [`hg_surface_from_json`] /
 * [`hg_weierstrass_surface_from_json`] that has not been freed.
 */
void hg_surface_free(struct HgSurface *s);

/**
 * Serializes the surface back to its canonical JSON document.
 *
 * # Safety
 * `s` must be a valid handle and `out` a valid pointer.
 */
enum HgStatus hg_surface_to_json(const struct HgSurface *s, char **out);

/**
 * Exact squared distortion at (x, y), written as a `"num/den"` string.
 *
 * # Safety
 * `s` must be a valid handle; `x`, `y` NUL-terminated rationals; `out` valid.
 */
enum HgStatus hg_surface_distortion_sq(const struct HgSurface *s,
                                       const char *x,
                                       const char *y,
                                       char **out);

/**
 * Exact squared distortion of the Gauss map at (x, y).
 *
 * # Safety
 * Same contract as [`hg_surface_distortion_sq`].
 */
enum HgStatus hg_surface_gauss_distortion_sq(const struct HgSurface *s,
                                             const char *x,
                                             const char *y,
                                             char **out);

/**
 * Exact curvature sign proxy at (x, y); non-positive for every harmonic
 * surface.
 *
 * # Safety
 * Same contract as [`hg_surface_distortion_sq`].
 */
enum HgStatus hg_surface_curvature_sign(const struct HgSurface *s,
                                        const char *x,
                                        const char *y,
                                        char **out);

/**
 * Unit normal at (x, y), written into `out_normal[0..3]`.
 *
 * # Safety
 * `s` must be a valid handle; `x`, `y` NUL-terminated rationals;
 * `out_normal` must point to at least 3 writable doubles.
 */
enum HgStatus hg_surface_normal(const struct HgSurface *s,
                                const char *x,
                                const char *y,
                                double *out_normal);

/**
 * Exact planarity decision. Writes 1 (planar) or 0 into `out_planar`; when
 * planar, the constant unit normal goes into `out_normal[0..3]` (otherwise
 * the array is zeroed).
 *
 * # Safety
 * `s` must be a valid handle; `out_planar` and `out_normal` (3 doubles)
 * must be writable.
 */
enum HgStatus hg_surface_is_planar(const struct HgSurface *s,
                                   int32_t *out_planar,
                                   double *out_normal);

/**
 * Integrates generator data (`{"p": ..., "q": ...}` or a phi triple) into
 * a surface handle over [-1, 1]².
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HgStatus hg_weierstrass_surface_from_json(const char *json, struct HgSurface **out);

/**
 * Runs a verification suite (`thm1-exact`, `thm1-numeric`, `dilatation`,
 * `remark14`, `thm3`). `params_json` may be null for defaults or a JSON
 * object with any of: count, degree, height, seed, pts, fd_step, tol, nx,
 * ny, normalized. The JSON report goes to `out_report`; the failure count
 * to `out_failures`.
 *
 * # Safety
 * `suite` must be a valid NUL-terminated string; `params_json` null or
 * valid; `out_report` and `out_failures` valid pointers.
 */
enum HgStatus hg_verify_suite(const char *suite,
                              const char *params_json,
                              char **out_report,
                              uint64_t *out_failures);

/**
 * Frees a string returned by this library; null is a no-op.
 *
 * # Safety
 * `s` must be null or a string pointer returned by this library that has
 * not been freed.
 */
void hg_string_free(char *s);

/**
 * Static name for a status code.
 */
const char *hg_status_name(enum HgStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HARMONIC_GAUSS_H */

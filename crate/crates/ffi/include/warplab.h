#ifndef WARPLAB_H
#define WARPLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Direction of travel along the knot, as passed to
 * [`warplab_warping_degree`].
 */
typedef enum WarplabOrientation {
  WARPLAB_ORIENTATION_FORWARD = 0,
  WARPLAB_ORIENTATION_BACKWARD = 1,
} WarplabOrientation;

/**
 * Result codes of the C interface.
 */
typedef enum WarplabStatus {
  WARPLAB_STATUS_OK = 0,
  WARPLAB_STATUS_NULL_POINTER = 1,
  WARPLAB_STATUS_INVALID_UTF8 = 2,
  WARPLAB_STATUS_PARSE = 3,
  WARPLAB_STATUS_SHADOW_INPUT = 4,
  WARPLAB_STATUS_INVALID_ARGUMENT = 5,
  WARPLAB_STATUS_UNSUPPORTED = 6,
  WARPLAB_STATUS_PANIC = 7,
} WarplabStatus;

/**
 * An opaque knot diagram or shadow.
 */
typedef struct WarplabDiagram WarplabDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a PD code (`X(...)` records for a diagram, `P(...)` for a shadow).
 *
 * # Safety
 * `pd` must be a nul-terminated string and `out` a valid pointer.
 */
enum WarplabStatus warplab_diagram_parse(const char *pd, struct WarplabDiagram **out);

/**
 * Releases a diagram. Null is ignored.
 *
 * # Safety
 * `d` must be null or a handle not yet freed.
 */
void warplab_diagram_free(struct WarplabDiagram *d);

/**
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum WarplabStatus warplab_crossing_count(const struct WarplabDiagram *d, size_t *out);

/**
 * Whether the handle is a shadow (no over/under information).
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum WarplabStatus warplab_is_shadow(const struct WarplabDiagram *d, bool *out);

/**
 * d(D) for an orientation given as a [`WarplabOrientation`] value.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum WarplabStatus warplab_warping_degree(const struct WarplabDiagram *d,
                                          int32_t orientation,
                                          size_t *out);

/**
 * d(P) of the underlying shadow.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum WarplabStatus warplab_projection_warping_degree(const struct WarplabDiagram *d, size_t *out);

/**
 * l(P) of the underlying shadow.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer.
 */
enum WarplabStatus warplab_projection_length(const struct WarplabDiagram *d, size_t *out);

/**
 * Canonical code of the diagram, equal for isomorphic diagrams.
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer. Free the result with
 * [`warplab_string_free`].
 */
enum WarplabStatus warplab_canonical_code(const struct WarplabDiagram *d, char **out);

/**
 * Knot name from the bundled table, e.g. "5_2" or "3_1 # 3_1".
 *
 * # Safety
 * `d` must be a live handle and `out` a valid pointer. Free the result with
 * [`warplab_string_free`].
 */
enum WarplabStatus warplab_identify(const struct WarplabDiagram *d, char **out);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void warplab_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *warplab_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WARPLAB_H */

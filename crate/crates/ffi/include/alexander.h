#ifndef ALEXANDER_H
#define ALEXANDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AlexLinkMode {
  // Every meridian to `t`.
  ALEX_LINK_MODE_ONE_VARIABLE = 0,
  // One variable per component.
  ALEX_LINK_MODE_MULTIVARIABLE = 1,
  // Twisted polynomial of the marked link (one-variable if unmarked).
  ALEX_LINK_MODE_HAT = 2,
} AlexLinkMode;

typedef enum AlexStatus {
  ALEX_STATUS_OK = 0,
  ALEX_STATUS_NULL_POINTER = 1,
  ALEX_STATUS_INVALID_UTF8 = 2,
  ALEX_STATUS_PARSE = 3,
  ALEX_STATUS_INVALID_INPUT = 4,
  ALEX_STATUS_COMPUTATION = 5,
  ALEX_STATUS_PANIC = 6,
} AlexStatus;

// Laurent polynomial in one variable with rational coefficients.
typedef struct AlexPoly AlexPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after success.
// Valid until the next call on the same thread.
const char *alex_last_error(void);

// # Safety
// `s` must be null or a string returned by this library.
void alex_string_free(char *s);

// Parses text such as `t^-1 - 1 + t`.
//
// # Safety
// `s` must be a NUL-terminated string; `out` must be writable.
enum AlexStatus alex_poly_parse(const char *s, struct AlexPoly **out);

// # Safety
// `p` must be null or a handle from this library, not yet freed.
void alex_poly_free(struct AlexPoly *p);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum AlexStatus alex_poly_to_string(const struct AlexPoly *p, char **out);

// Unit-normal form: integer, primitive, lowest exponent 0, positive
// leading coefficient.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum AlexStatus alex_poly_normalize(const struct AlexPoly *p, struct AlexPoly **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum AlexStatus alex_poly_mul(const struct AlexPoly *a,
                              const struct AlexPoly *b,
                              struct AlexPoly **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum AlexStatus alex_poly_gcd(const struct AlexPoly *a,
                              const struct AlexPoly *b,
                              struct AlexPoly **out);

// Whether `a` divides `b` up to units.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum AlexStatus alex_poly_divides(const struct AlexPoly *a, const struct AlexPoly *b, bool *out);

// Whether `p` is zero or a product of cyclotomic polynomials.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum AlexStatus alex_poly_is_cyclotomic(const struct AlexPoly *p, bool *out);

// Largest `k` with `factor^k | p`; -1 when `p` is zero.
//
// # Safety
// `p`, `factor` must be live handles; `out` must be writable.
enum AlexStatus alex_poly_multiplicity(const struct AlexPoly *p,
                                       const struct AlexPoly *factor,
                                       int64_t *out);

// Alexander polynomial of a presentation JSON, as normalized text.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum AlexStatus alex_fox_json(const char *json, char **out);

// Alexander polynomial of a link JSON, as normalized text.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum AlexStatus alex_link_json(const char *json, enum AlexLinkMode mode, char **out);

// Runs every check for a curve JSON against `delta` (polynomial text) and
// the generic link at infinity. Writes the JSON report and whether all
// checks passed.
//
// # Safety
// `curve_json`, `delta` must be NUL-terminated strings; `report`, `passed`
// must be writable.
enum AlexStatus alex_verify_curve_json(const char *curve_json,
                                       const char *delta,
                                       char **report,
                                       bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALEXANDER_H */

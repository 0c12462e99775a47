#ifndef BESSELTRIG_H
#define BESSELTRIG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BtStatus {
  BT_STATUS_OK = 0,
  BT_STATUS_NULL_POINTER = 1,
  BT_STATUS_INVALID_UTF8 = 2,
  BT_STATUS_BUFFER_TOO_SMALL = 3,
  BT_STATUS_INVALID_ARGUMENT = 4,
  BT_STATUS_INVALID_SPEC = 5,
  BT_STATUS_UNKNOWN_NAME = 6,
  BT_STATUS_INVALID_TARGET = 7,
  BT_STATUS_DOMAIN = 8,
  BT_STATUS_PRECISION = 9,
  BT_STATUS_NO_SIGN_CHANGE = 10,
  BT_STATUS_UNSUPPORTED_QUERY = 11,
  BT_STATUS_PANIC = 12,
} BtStatus;

typedef enum BtFormat {
  BT_FORMAT_TEXT = 0,
  BT_FORMAT_LATEX = 1,
  BT_FORMAT_JSON = 2,
} BtFormat;

typedef enum BtSumFamily {
  BT_SUM_FAMILY_COS_EVEN_HALF = 0,
  BT_SUM_FAMILY_SIN_EVEN_HALF = 1,
  BT_SUM_FAMILY_COS_ODD_CIRCLE = 2,
  BT_SUM_FAMILY_COS_EVEN_CIRCLE = 3,
  BT_SUM_FAMILY_MIX_EVEN_EVEN = 4,
  BT_SUM_FAMILY_MIX_EVEN_ODD = 5,
  BT_SUM_FAMILY_ZERO_EVEN_EVEN = 6,
  BT_SUM_FAMILY_MIX_ODD_EVEN_COS = 7,
  BT_SUM_FAMILY_MIX_ODD_EVEN_SIN = 8,
  BT_SUM_FAMILY_MIX_ODD_ODD_COS = 9,
  BT_SUM_FAMILY_MIX_ODD_ODD_SIN = 10,
} BtSumFamily;

/**
 * Opaque formula handle.
 */
typedef struct BtFormula BtFormula;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message (empty after a success).
 *
 * # Safety
 * `buf` must be valid for `len` bytes; `needed` may be null.
 */
enum BtStatus bt_last_error_message(char *buf, size_t len, size_t *needed);

/**
 * Looks up a named formula such as `"APP1"` or `"J0n6opt"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum BtStatus bt_formula_catalog(const char *name, struct BtFormula **out);

/**
 * `J_0` from `n` cosine nodes offset by `theta = (theta_num/theta_den)·π`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_formula_build_j0(uint32_t n,
                                  int64_t theta_num,
                                  int64_t theta_den,
                                  struct BtFormula **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_formula_build_j0_optimal(uint32_t n, struct BtFormula **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_formula_build_jp(uint32_t p, uint32_t n, struct BtFormula **out);

/**
 * `J_{2n+1}` from `2n + 1` sine terms.
 *
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_formula_build_odd_order(uint32_t n, struct BtFormula **out);

/**
 * `-d/dx` of a `J_0` formula, which approximates `J_1`.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BtStatus bt_formula_differentiate(const struct BtFormula *f, struct BtFormula **out);

/**
 * # Safety
 * `f` must be null or a handle not yet freed.
 */
void bt_formula_free(struct BtFormula *f);

/**
 * Bessel order the formula approximates.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BtStatus bt_formula_target(const struct BtFormula *f, uint32_t *out);

/**
 * Power of `x` in the leading term of the predicted error.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BtStatus bt_formula_error_order(const struct BtFormula *f, uint32_t *out);

/**
 * # Safety
 * `f` must be a live handle; `buf` must be valid for `len` bytes.
 */
enum BtStatus bt_formula_emit(const struct BtFormula *f,
                              enum BtFormat format,
                              char *buf,
                              size_t len,
                              size_t *needed);

/**
 * Evaluates the formula at `x` using `digits` decimal digits (0 for the
 * default) and rounds to a double.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BtStatus bt_formula_eval(const struct BtFormula *f, double x, uint32_t digits, double *out);

/**
 * Full-precision evaluation: `x` is a decimal string, the result is
 * written in scientific notation with `digits` significant digits.
 *
 * # Safety
 * `f` must be a live handle; `x` NUL-terminated; `buf` valid for `len` bytes.
 */
enum BtStatus bt_formula_eval_str(const struct BtFormula *f,
                                  const char *x,
                                  uint32_t digits,
                                  char *buf,
                                  size_t len,
                                  size_t *needed);

/**
 * The reference value `J_p(x)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_bessel_j(uint32_t p, double x, uint32_t digits, double *out);

/**
 * `formula(x) - J_p(x)` computed at `digits` and rounded to a double.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum BtStatus bt_spot_error(const struct BtFormula *f, double x, uint32_t digits, double *out);

/**
 * Closed-form power sum at `theta = (theta_num/theta_den)·π`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_power_sum_closed_form(enum BtSumFamily family,
                                       uint32_t node_param,
                                       uint32_t q,
                                       uint32_t k,
                                       int64_t theta_num,
                                       int64_t theta_den,
                                       uint32_t digits,
                                       double *out);

/**
 * The same sum evaluated term by term.
 *
 * # Safety
 * `out` must be writable.
 */
enum BtStatus bt_power_sum_brute_force(enum BtSumFamily family,
                                       uint32_t node_param,
                                       uint32_t q,
                                       uint32_t k,
                                       int64_t theta_num,
                                       int64_t theta_den,
                                       uint32_t digits,
                                       double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BESSELTRIG_H */

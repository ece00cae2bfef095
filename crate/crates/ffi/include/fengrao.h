#ifndef FENGRAO_H
#define FENGRAO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum FengraoStatus {
  FENGRAO_STATUS_OK = 0,
  FENGRAO_STATUS_NULL_POINTER = 1,
  FENGRAO_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The library rejected the input (bad parameters, infeasible d, ...).
   */
  FENGRAO_STATUS_DOMAIN = 3,
  FENGRAO_STATUS_BUDGET_EXCEEDED = 4,
  FENGRAO_STATUS_PANIC = 5,
} FengraoStatus;

typedef enum FengraoRule {
  /**
   * `[n, k, d - s]`
   */
  FENGRAO_RULE_REDUCE_DISTANCE = 1,
  /**
   * `[n, k - s, d]`
   */
  FENGRAO_RULE_REDUCE_DIMENSION = 2,
  /**
   * `[n - s, k - s, d]`
   */
  FENGRAO_RULE_SHORTEN = 3,
} FengraoRule;

typedef enum FengraoFormat {
  FENGRAO_FORMAT_CSV = 0,
  FENGRAO_FORMAT_MARKDOWN = 1,
  FENGRAO_FORMAT_JSON = 2,
} FengraoFormat;

/**
 * Opaque catalog curve.
 */
typedef struct FengraoCurve FengraoCurve;

/**
 * Opaque numerical semigroup.
 */
typedef struct FengraoSemigroup FengraoSemigroup;

typedef struct FengraoParams {
  uint64_t n;
  uint64_t k;
  uint64_t d;
} FengraoParams;

typedef struct FengraoCurveInfo {
  uint32_t q;
  uint32_t q0;
  uint64_t genus;
  /**
   * Rational points over GF(q).
   */
  uint64_t points;
} FengraoCurveInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *fengrao_last_error(void);

/**
 * Static description of a status code.
 */
const char *fengrao_status_str(enum FengraoStatus status);

/**
 * # Safety
 * `gens` points to `len` readable values; `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_new(const uint32_t *gens,
                                         size_t len,
                                         struct FengraoSemigroup **out);

/**
 * # Safety
 * `sg` is NULL or a handle from this library, not freed before.
 */
void fengrao_semigroup_free(struct FengraoSemigroup *sg);

/**
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_genus(const struct FengraoSemigroup *sg, uint32_t *out);

/**
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_conductor(const struct FengraoSemigroup *sg, uint32_t *out);

/**
 * `rho_i`, one-based.
 *
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_rho(const struct FengraoSemigroup *sg,
                                         uint64_t i,
                                         uint64_t *out);

/**
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_nu(const struct FengraoSemigroup *sg,
                                        uint64_t l,
                                        uint64_t *out);

/**
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_semigroup_r(const struct FengraoSemigroup *sg,
                                       uint32_t d,
                                       uint64_t *out);

/**
 * `[n, n - r_d, d]`.
 *
 * # Safety
 * `sg` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_improved_params(const struct FengraoSemigroup *sg,
                                           uint64_t n,
                                           uint32_t d,
                                           uint32_t q,
                                           struct FengraoParams *out);

/**
 * # Safety
 * `out` is writable.
 */
enum FengraoStatus fengrao_propagate(struct FengraoParams params,
                                     enum FengraoRule rule,
                                     uint64_t s,
                                     struct FengraoParams *out);

/**
 * A catalog curve by name: `D2`, `H3`, or `D:q0=7,m=2`.
 *
 * # Safety
 * `name` is a NUL-terminated string and `out` is writable.
 */
enum FengraoStatus fengrao_curve_new(const char *name, struct FengraoCurve **out);

/**
 * # Safety
 * `curve` is NULL or a handle from this library, not freed before.
 */
void fengrao_curve_free(struct FengraoCurve *curve);

/**
 * # Safety
 * `curve` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_curve_info(const struct FengraoCurve *curve,
                                      struct FengraoCurveInfo *out);

/**
 * The semigroup at a labelled point (`Pinf`, `P`, `P1`, ...). The returned
 * handle is owned by the caller.
 *
 * # Safety
 * `curve` is a live handle, `label` a NUL-terminated string, `out` writable.
 */
enum FengraoStatus fengrao_curve_semigroup(const struct FengraoCurve *curve,
                                           const char *label,
                                           struct FengraoSemigroup **out);

/**
 * Dimension of the improved code at infinity, by rank of its check matrix.
 *
 * # Safety
 * `curve` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_curve_code_dim(const struct FengraoCurve *curve,
                                          uint32_t d,
                                          uint64_t *out);

/**
 * Exact minimum distance of the improved code at infinity, if `q^k` stays
 * within `budget`.
 *
 * # Safety
 * `curve` is a live handle and `out` is writable.
 */
enum FengraoStatus fengrao_curve_min_distance(const struct FengraoCurve *curve,
                                              uint32_t d,
                                              uint64_t budget,
                                              uint64_t *out);

/**
 * The recomputed reference table over GF(q) as a newly allocated string.
 * Release it with [`fengrao_string_free`].
 *
 * # Safety
 * `out` is writable.
 */
enum FengraoStatus fengrao_table(uint32_t q, enum FengraoFormat format, char **out);

/**
 * # Safety
 * `s` is NULL or a string returned by this library, not freed before.
 */
void fengrao_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FENGRAO_H */

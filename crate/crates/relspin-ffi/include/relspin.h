#ifndef RELSPIN_H
#define RELSPIN_H

/* Generated by cbindgen from relspin-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum {
  RELSPIN_STATUS_OK = 0,
  RELSPIN_STATUS_NULL_ARGUMENT = 1,
  RELSPIN_STATUS_INVALID_ARGUMENT = 2,
  RELSPIN_STATUS_OUT_OF_RANGE = 3,
  RELSPIN_STATUS_SUPERCRITICAL = 4,
  RELSPIN_STATUS_SINGULAR_MOMENTUM = 5,
  RELSPIN_STATUS_NUMERICAL_FAILURE = 6,
} RelspinStatus;

/**
 * Spin projection of the ground-state doublet.
 */
typedef enum {
  RELSPIN_ORIENTATION_UP = 0,
  RELSPIN_ORIENTATION_DOWN = 1,
} RelspinOrientation;

/**
 * The six spin-operator families, in report order.
 */
typedef enum {
  RELSPIN_SPIN_KIND_PAULI = 0,
  RELSPIN_SPIN_KIND_FOLDY_WOUTHUYSEN = 1,
  RELSPIN_SPIN_KIND_CZACHOR = 2,
  RELSPIN_SPIN_KIND_FRENKEL = 3,
  RELSPIN_SPIN_KIND_CHAKRABARTI = 4,
  RELSPIN_SPIN_KIND_PRYCE = 5,
} RelspinSpinKind;

/**
 * Opaque handle to one hydrogenic ground state on its momentum grid.
 */
typedef struct RelspinState RelspinState;

/**
 * One row of the property report: sampled yes/no outcomes with the worst
 * defect norms behind them. Boolean fields use 1 for yes.
 */
typedef struct {
  RelspinSpinKind kind;
  uint8_t commutes_with_h0;
  uint8_t algebra_holds;
  uint8_t eigenvalues_half;
  uint8_t covariance_holds;
  uint8_t matches_reference;
  double h0_defect;
  double algebra_defect;
  double eigenvalue_deviation;
  double covariance_defect;
} RelspinTableRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *relspin_version(void);

/**
 * Human-readable description of a status code (static string).
 */
const char *relspin_status_message(RelspinStatus status);

/**
 * The built-in CODATA value of the fine-structure constant.
 */
double relspin_default_alpha_el(void);

/**
 * Bound energy `E(n, j)` in atomic units, rest energy included. `twice_j`
 * is `2 j` (so 1 for the ground state). Pass `alpha_el <= 0` for the
 * default constant.
 *
 * # Safety
 *
 * `out_energy` must be null or valid for writing one `f64`.
 */
RelspinStatus relspin_bound_energy(uint32_t n,
                                   int32_t twice_j,
                                   uint32_t z,
                                   double alpha_el,
                                   double *out_energy);

/**
 * Build a ground state. Orders of `0` select the defaults (32 radial, 8
 * angular). On success `*out` owns the handle; release it with
 * [`relspin_state_free`].
 *
 * # Safety
 *
 * `out` must be null or valid for writing one pointer.
 */
RelspinStatus relspin_state_new(uint32_t z,
                                RelspinOrientation orientation,
                                uint32_t radial_order,
                                uint32_t angular_order,
                                double alpha_el,
                                RelspinState **out);

/**
 * Release a state handle. Passing null is a no-op.
 *
 * # Safety
 *
 * `state` must be null or a pointer obtained from [`relspin_state_new`]
 * that has not been freed yet.
 */
void relspin_state_free(RelspinState *state);

/**
 * Ground-state exponent, bound energy and grid norm of a state. Null output
 * pointers are skipped.
 *
 * # Safety
 *
 * `state` must be a live pointer from [`relspin_state_new`].
 */
RelspinStatus relspin_state_info(const RelspinState *state,
                                 double *out_gamma,
                                 double *out_energy,
                                 double *out_norm);

/**
 * Spin expectation of the state for one family and axis (1..3), with the
 * variance and the order-doubling quadrature error estimate. Null output
 * pointers are skipped.
 *
 * # Safety
 *
 * `state` must be a live pointer from [`relspin_state_new`].
 */
RelspinStatus relspin_spin_expectation(const RelspinState *state,
                                       RelspinSpinKind kind,
                                       uint32_t axis,
                                       double *out_value,
                                       double *out_variance,
                                       double *out_error_estimate);

/**
 * Run the sampled property sweep and fill six table rows (one per family,
 * in enumeration order). `out_matches` is set to 1 when all rows reproduce
 * the reference pattern.
 *
 * # Safety
 *
 * `rows` must be null or point to an array of at least six
 * `RelspinTableRow` slots.
 */
RelspinStatus relspin_table_report(uint32_t samples,
                                   uint64_t seed,
                                   double alpha_el,
                                   RelspinTableRow *rows,
                                   uint8_t *out_matches);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELSPIN_H */

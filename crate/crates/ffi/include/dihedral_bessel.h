#ifndef DIHEDRAL_BESSEL_H
#define DIHEDRAL_BESSEL_H

/* Generated by cbindgen from dihedral-bessel-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Evaluation routes for the series.
 */
typedef enum {
  DBESSEL_ROUTE_DIRECT = 0,
  DBESSEL_ROUTE_CLOSED_N1 = 1,
  DBESSEL_ROUTE_CLOSED_N2 = 2,
  DBESSEL_ROUTE_INTEGRAL_N4 = 3,
  DBESSEL_ROUTE_HORN_PHI2 = 4,
} DbesselRoute;

/**
 * Result codes. Zero is success; everything else identifies the failure
 * class (the library's error message is not carried across the ABI).
 */
typedef enum {
  DBESSEL_STATUS_OK = 0,
  /**
   * An argument was outside the documented domain.
   */
  DBESSEL_STATUS_DOMAIN = 1,
  /**
   * A series hit its term cap before reaching the tolerance.
   */
  DBESSEL_STATUS_TRUNCATION = 2,
  /**
   * Quadrature could not reach the requested accuracy.
   */
  DBESSEL_STATUS_QUADRATURE = 3,
  /**
   * A combinatorial enumeration would exceed its size cap.
   */
  DBESSEL_STATUS_TOO_LARGE = 4,
  /**
   * A computed value was not finite.
   */
  DBESSEL_STATUS_NON_FINITE = 5,
  /**
   * A required pointer argument was null.
   */
  DBESSEL_STATUS_NULL_ARGUMENT = 6,
  /**
   * The library panicked; state is still consistent but the call
   * produced nothing.
   */
  DBESSEL_STATUS_PANIC = 7,
} DbesselStatus;

/**
 * A series value with its truncation report.
 */
typedef struct {
  double value;
  uintptr_t terms_used;
  double tail_bound;
} DbesselEval;

/**
 * Opaque handle to a Gauss-Jacobi integration context for the weight
 * `(1 - z^2)^(k-1)` on `[-1, 1]`.
 */
typedef struct {
  uint8_t _private[0];
} DbesselQuadrature;

/**
 * Nullable integrand callback: receives the node `z` and the caller's
 * context pointer, returns `f(z)`.
 */
typedef double (*DbesselIntegrand)(double z, void *ctx);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Natural log of the gamma function, `x > 0`.
 */
DbesselStatus dbessel_log_gamma(double x, double *out);

/**
 * Rising factorial `(x)_m`.
 */
DbesselStatus dbessel_pochhammer(double x, uint32_t m, double *out);

/**
 * Gegenbauer polynomial `C_j^(k)(x)`, `k > 0`.
 */
DbesselStatus dbessel_gegenbauer(uint32_t j, double k, double x, double *out);

/**
 * Chebyshev polynomial of the first kind `T_n(x)`.
 */
DbesselStatus dbessel_chebyshev_t(uint32_t n, double x, double *out);

/**
 * Modified Bessel function `I_nu(x)` for `nu > -1/2`, `x >= 0`.
 */
DbesselStatus dbessel_bessel_i(double nu, double x, double tol, uintptr_t max_terms, double *out);

/**
 * Normalized modified Bessel function
 * `Gamma(alpha+1) (2/u)^alpha I_alpha(u)`; equals 1 at `u = 0`.
 */
DbesselStatus dbessel_normalized_bessel_i(double alpha,
                                          double u,
                                          double tol,
                                          uintptr_t max_terms,
                                          double *out);

/**
 * Evaluates the series `F(n, k; R, xi)` by the requested route.
 * `integral_n4` uses the default Gauss-Jacobi settings.
 */
DbesselStatus dbessel_series_eval(uint32_t n,
                                  double k,
                                  double r,
                                  double xi,
                                  DbesselRoute route,
                                  double tol,
                                  uintptr_t max_terms,
                                  DbesselEval *out);

/**
 * Horn confluent hypergeometric series `Phi_2^(m)` of `len` variables.
 * `betas` and `xs` must both point to `len` doubles.
 */
DbesselStatus dbessel_horn_phi2(const double *betas,
                                const double *xs,
                                uintptr_t len,
                                double gamma,
                                double tol,
                                uintptr_t max_terms,
                                double *out);

/**
 * Creates an integration context. `points` is the base rule size
 * (doubled until the target tolerance holds). Free with
 * [`dbessel_quadrature_free`].
 */
DbesselStatus dbessel_quadrature_new(double k,
                                     uintptr_t points,
                                     double target_tol,
                                     DbesselQuadrature **out);

/**
 * Releases a context created by [`dbessel_quadrature_new`]. Passing null
 * is a no-op.
 */
void dbessel_quadrature_free(DbesselQuadrature *handle);

/**
 * Computes `int_{-1}^{1} f(z) (1 - z^2)^(k-1) dz` with the weight
 * handled analytically. The callback must be re-entrant.
 */
DbesselStatus dbessel_quadrature_integrate(const DbesselQuadrature *handle,
                                           DbesselIntegrand f,
                                           void *ctx,
                                           double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIHEDRAL_BESSEL_H */

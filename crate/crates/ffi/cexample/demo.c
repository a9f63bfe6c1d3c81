/* Demo of the C API: evaluates the series by two routes, checks they
 * agree, and integrates against the Jacobi weight through a callback.
 *
 * Build (from the repository root):
 *   cargo build --release -p dihedral-bessel-ffi
 *   cc crates/ffi/cexample/demo.c -Icrates/ffi/include \
 *      target/release/libdihedral_bessel_ffi.a -lm -o demo
 */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#include "dihedral_bessel.h"

static double scaled_exp(double z, void *ctx) {
    double c = *(const double *)ctx;
    return exp(c * z);
}

int main(void) {
    DbesselEval direct, closed;
    double pi_half = 1.5707963267948966;

    if (dbessel_series_eval(2, 1.0, 1.0, pi_half, DBESSEL_ROUTE_DIRECT, 1e-12,
                            10000, &direct) != DBESSEL_STATUS_OK) {
        fprintf(stderr, "direct route failed\n");
        return 1;
    }
    if (dbessel_series_eval(2, 1.0, 1.0, pi_half, DBESSEL_ROUTE_CLOSED_N2, 1e-12,
                            10000, &closed) != DBESSEL_STATUS_OK) {
        fprintf(stderr, "closed route failed\n");
        return 1;
    }
    printf("F(2,1;1,pi/2): direct = %.16e (%zu terms), closed = %.16e\n",
           direct.value, direct.terms_used, closed.value);
    if (fabs(direct.value - closed.value) > 1e-10 * fabs(closed.value)) {
        fprintf(stderr, "routes disagree\n");
        return 1;
    }

    double i_half;
    if (dbessel_bessel_i(0.5, 1.0, 1e-14, 10000, &i_half) != DBESSEL_STATUS_OK) {
        return 1;
    }
    double want = sqrt(2.0 / (3.141592653589793 * 1.0)) * sinh(1.0);
    printf("I_{1/2}(1) = %.16e (closed form %.16e)\n", i_half, want);
    if (fabs(i_half - want) > 1e-12) return 1;

    DbesselQuadrature *quad = NULL;
    if (dbessel_quadrature_new(1.5, 32, 1e-11, &quad) != DBESSEL_STATUS_OK) {
        return 1;
    }
    double c = 0.8, integral;
    if (dbessel_quadrature_integrate(quad, scaled_exp, &c, &integral) !=
        DBESSEL_STATUS_OK) {
        dbessel_quadrature_free(quad);
        return 1;
    }
    dbessel_quadrature_free(quad);
    printf("int e^{0.8 z} (1-z^2)^{1/2} dz = %.16e\n", integral);

    /* error paths */
    double unused;
    if (dbessel_log_gamma(-1.0, &unused) != DBESSEL_STATUS_DOMAIN) return 1;
    if (dbessel_log_gamma(1.0, NULL) != DBESSEL_STATUS_NULL_ARGUMENT) return 1;

    printf("ok\n");
    return 0;
}

//! C ABI for the dihedral Bessel series library.
//!
//! Every function returns a [`DbesselStatus`] and writes its result
//! through an out-pointer. Handles returned by `_new` functions are
//! opaque and must be released with the matching `_free`. All functions
//! are safe to call from multiple threads at once; no global state.
//!
//! # Safety
//!
//! Callers must pass valid, properly aligned pointers: `out` arguments
//! must be writable, array arguments must cover the stated length, and
//! handles must originate from this library and not be used after
//! `_free`. Null `out`/handle/callback pointers are detected and
//! reported as [`DbesselStatus::NullArgument`]; anything else is the
//! caller's contract.
//!
//! The header `include/dihedral_bessel.h` is generated from this file at
//! build time.

// the module-level pointer contract applies uniformly; per-function
// sections would just be copied verbatim into the generated header
#![allow(clippy::missing_safety_doc)]

use std::ffi::c_void;
use std::panic::{catch_unwind, AssertUnwindSafe};

use dihedral_bessel::quadrature::{integrate_jacobi_weight, QuadratureSpec};
use dihedral_bessel::series::{eval_route, horn_phi2, Route, SeriesParams, Truncation};
use dihedral_bessel::special::{
    bessel_i, chebyshev_t, gegenbauer, log_gamma, normalized_bessel_i, pochhammer, BesselOrder,
};
use dihedral_bessel::Error;

/// Result codes. Zero is success; everything else identifies the failure
/// class (the library's error message is not carried across the ABI).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbesselStatus {
    Ok = 0,
    /// An argument was outside the documented domain.
    Domain = 1,
    /// A series hit its term cap before reaching the tolerance.
    Truncation = 2,
    /// Quadrature could not reach the requested accuracy.
    Quadrature = 3,
    /// A combinatorial enumeration would exceed its size cap.
    TooLarge = 4,
    /// A computed value was not finite.
    NonFinite = 5,
    /// A required pointer argument was null.
    NullArgument = 6,
    /// The library panicked; state is still consistent but the call
    /// produced nothing.
    Panic = 7,
}

fn status_of(e: &Error) -> DbesselStatus {
    match e {
        Error::Domain(_) => DbesselStatus::Domain,
        Error::Truncation { .. } => DbesselStatus::Truncation,
        Error::Quadrature(_) => DbesselStatus::Quadrature,
        Error::CombinatorialSize { .. } => DbesselStatus::TooLarge,
        Error::NonFinite(_) => DbesselStatus::NonFinite,
    }
}

/// Evaluation routes for the series.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbesselRoute {
    Direct = 0,
    ClosedN1 = 1,
    ClosedN2 = 2,
    IntegralN4 = 3,
    HornPhi2 = 4,
}

impl From<DbesselRoute> for Route {
    fn from(r: DbesselRoute) -> Route {
        match r {
            DbesselRoute::Direct => Route::Direct,
            DbesselRoute::ClosedN1 => Route::ClosedN1,
            DbesselRoute::ClosedN2 => Route::ClosedN2,
            DbesselRoute::IntegralN4 => Route::IntegralN4,
            DbesselRoute::HornPhi2 => Route::HornPhi2,
        }
    }
}

/// A series value with its truncation report.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct DbesselEval {
    pub value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

fn guarded<T>(out: *mut T, body: impl FnOnce() -> Result<T, DbesselStatus>) -> DbesselStatus {
    if out.is_null() {
        return DbesselStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(v)) => {
            unsafe { out.write(v) };
            DbesselStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => DbesselStatus::Panic,
    }
}

/// Natural log of the gamma function, `x > 0`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_log_gamma(x: f64, out: *mut f64) -> DbesselStatus {
    guarded(out, || log_gamma(x).map_err(|e| status_of(&e)))
}

/// Rising factorial `(x)_m`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_pochhammer(x: f64, m: u32, out: *mut f64) -> DbesselStatus {
    guarded(out, || Ok(pochhammer(x, m)))
}

/// Gegenbauer polynomial `C_j^(k)(x)`, `k > 0`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_gegenbauer(
    j: u32,
    k: f64,
    x: f64,
    out: *mut f64,
) -> DbesselStatus {
    guarded(out, || gegenbauer(j, k, x).map_err(|e| status_of(&e)))
}

/// Chebyshev polynomial of the first kind `T_n(x)`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_chebyshev_t(n: u32, x: f64, out: *mut f64) -> DbesselStatus {
    guarded(out, || Ok(chebyshev_t(n, x)))
}

/// Modified Bessel function `I_nu(x)` for `nu > -1/2`, `x >= 0`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_bessel_i(
    nu: f64,
    x: f64,
    tol: f64,
    max_terms: usize,
    out: *mut f64,
) -> DbesselStatus {
    guarded(out, || {
        let order = BesselOrder::new(nu).map_err(|e| status_of(&e))?;
        let trunc = Truncation::new(tol, max_terms).map_err(|e| status_of(&e))?;
        bessel_i(order, x, trunc).map_err(|e| status_of(&e))
    })
}

/// Normalized modified Bessel function
/// `Gamma(alpha+1) (2/u)^alpha I_alpha(u)`; equals 1 at `u = 0`.
#[no_mangle]
pub unsafe extern "C" fn dbessel_normalized_bessel_i(
    alpha: f64,
    u: f64,
    tol: f64,
    max_terms: usize,
    out: *mut f64,
) -> DbesselStatus {
    guarded(out, || {
        let trunc = Truncation::new(tol, max_terms).map_err(|e| status_of(&e))?;
        normalized_bessel_i(alpha, u, trunc).map_err(|e| status_of(&e))
    })
}

/// Evaluates the series `F(n, k; R, xi)` by the requested route.
/// `integral_n4` uses the default Gauss-Jacobi settings.
#[no_mangle]
pub unsafe extern "C" fn dbessel_series_eval(
    n: u32,
    k: f64,
    r: f64,
    xi: f64,
    route: DbesselRoute,
    tol: f64,
    max_terms: usize,
    out: *mut DbesselEval,
) -> DbesselStatus {
    guarded(out, || {
        let params = SeriesParams::new(n, k, r, xi).map_err(|e| status_of(&e))?;
        let trunc = Truncation::new(tol, max_terms).map_err(|e| status_of(&e))?;
        let quad = QuadratureSpec::default();
        let res = eval_route(&params, route.into(), trunc, &quad).map_err(|e| status_of(&e))?;
        Ok(DbesselEval {
            value: res.value,
            terms_used: res.report.terms_used,
            tail_bound: res.report.tail_bound,
        })
    })
}

/// Horn confluent hypergeometric series `Phi_2^(m)` of `len` variables.
/// `betas` and `xs` must both point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn dbessel_horn_phi2(
    betas: *const f64,
    xs: *const f64,
    len: usize,
    gamma: f64,
    tol: f64,
    max_terms: usize,
    out: *mut f64,
) -> DbesselStatus {
    if betas.is_null() || xs.is_null() {
        return DbesselStatus::NullArgument;
    }
    let (betas, xs) = unsafe {
        (
            std::slice::from_raw_parts(betas, len),
            std::slice::from_raw_parts(xs, len),
        )
    };
    guarded(out, || {
        let trunc = Truncation::new(tol, max_terms).map_err(|e| status_of(&e))?;
        horn_phi2(betas, gamma, xs, trunc).map_err(|e| status_of(&e))
    })
}

struct QuadratureInner {
    k: f64,
    spec: QuadratureSpec,
}

/// Opaque handle to a Gauss-Jacobi integration context for the weight
/// `(1 - z^2)^(k-1)` on `[-1, 1]`.
#[repr(C)]
pub struct DbesselQuadrature {
    _private: [u8; 0],
}

/// Creates an integration context. `points` is the base rule size
/// (doubled until the target tolerance holds). Free with
/// [`dbessel_quadrature_free`].
#[no_mangle]
pub unsafe extern "C" fn dbessel_quadrature_new(
    k: f64,
    points: usize,
    target_tol: f64,
    out: *mut *mut DbesselQuadrature,
) -> DbesselStatus {
    if out.is_null() {
        return DbesselStatus::NullArgument;
    }
    if !k.is_finite() || k < 0.05 {
        return DbesselStatus::Domain;
    }
    let spec = match QuadratureSpec::new(
        dihedral_bessel::quadrature::QuadratureMethod::GaussJacobi,
        points,
        target_tol,
    ) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let inner = Box::new(QuadratureInner { k, spec });
    unsafe { out.write(Box::into_raw(inner) as *mut DbesselQuadrature) };
    DbesselStatus::Ok
}

/// Releases a context created by [`dbessel_quadrature_new`]. Passing null
/// is a no-op.
#[no_mangle]
pub unsafe extern "C" fn dbessel_quadrature_free(handle: *mut DbesselQuadrature) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle as *mut QuadratureInner) });
    }
}

/// Nullable integrand callback: receives the node `z` and the caller's
/// context pointer, returns `f(z)`.
pub type DbesselIntegrand = Option<unsafe extern "C" fn(z: f64, ctx: *mut c_void) -> f64>;

/// Computes `int_{-1}^{1} f(z) (1 - z^2)^(k-1) dz` with the weight
/// handled analytically. The callback must be re-entrant.
#[no_mangle]
pub unsafe extern "C" fn dbessel_quadrature_integrate(
    handle: *const DbesselQuadrature,
    f: DbesselIntegrand,
    ctx: *mut c_void,
    out: *mut f64,
) -> DbesselStatus {
    if handle.is_null() {
        return DbesselStatus::NullArgument;
    }
    let Some(f) = f else {
        return DbesselStatus::NullArgument;
    };
    let inner = unsafe { &*(handle as *const QuadratureInner) };
    let ctx_addr = ctx as usize;
    guarded(out, || {
        integrate_jacobi_weight(
            |z| unsafe { f(z, ctx_addr as *mut c_void) },
            inner.k,
            &inner.spec,
        )
        .map_err(|e| status_of(&e))
    })
}

//! Scalar special functions used throughout the crate: log-gamma,
//! Pochhammer symbols, Gegenbauer and Chebyshev polynomials, and modified
//! Bessel functions of the first kind. All functions here are pure and
//! thread-safe.

mod bessel;
mod gamma;
mod poly;

pub(crate) use bessel::normalized_bessel_series;
pub use bessel::{bessel_i, normalized_bessel_i, power_neumann_check, BesselOrder};
pub(crate) use gamma::pochhammer_dd;
pub use gamma::{dimidiation_check, log_gamma, pochhammer};
pub use poly::{
    chebyshev_t, gegenbauer, gegenbauer_even_quadratic, gegenbauer_explicit, reverse_chebyshev,
    PolyCoeffs,
};
pub(crate) use poly::{GegenbauerSeq, GegenbauerSeqDd};

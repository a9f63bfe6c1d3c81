//! Numerical evaluation of the dihedral Bessel series
//!
//! ```text
//! F(n, k; R, xi) = (2/R)^(n k) * sum_{j >= 0} (j + k) * I_{n(j+k)}(R) * C_j^(k)(cos xi)
//! ```
//!
//! where `I_nu` is the modified Bessel function of the first kind and
//! `C_j^(k)` the Gegenbauer polynomial of degree `j` and parameter `k`.
//! The series admits several independent representations: a closed
//! exponential form for `n = 1`, a normalized-Bessel form for `n = 2`, a
//! weighted integral for `n = 4`, and a multivariable confluent
//! hypergeometric (Horn `Phi_2`) form in the cosines of the multiple
//! angles `theta_s = (xi + 2 pi s)/n`. This crate evaluates all routes and
//! machine-verifies the identities connecting them, including the
//! per-degree expansion identity, the elementary-symmetric-function
//! closed forms for the angle cosines, and a triangular-inversion
//! representation of Gegenbauer polynomials.
//!
//! Modules:
//! - [`special`]: log-gamma, Pochhammer symbols, Gegenbauer and Chebyshev
//!   polynomials, modified Bessel functions of arbitrary real order
//! - [`angles`]: multiple-angle cosine sets and their symmetric functions
//! - [`quadrature`]: Gauss-Jacobi integration against `(1 - z^2)^(k-1)`
//! - [`series`]: the five evaluation routes for the series
//! - [`identity`]: per-degree identity checks, triangular inversion,
//!   subset-product representation
//! - [`cli`]: grid sweeps and machine-readable verification reports

pub mod angles;
pub mod cli;
mod comb;
pub mod dd;
mod error;
pub mod identity;
pub mod quadrature;
pub mod series;
pub mod special;
mod sum;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

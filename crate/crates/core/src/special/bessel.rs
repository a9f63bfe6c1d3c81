//! Modified Bessel functions of the first kind with arbitrary real order
//! `nu > -1/2`, evaluated by the ascending series
//!
//! ```text
//! I_nu(x) = sum_{m >= 0} (x/2)^(nu + 2m) / (m! Gamma(nu + m + 1))
//! ```
//!
//! The leading factor is carried in log space so large orders do not
//! underflow, and the positive tail is certified by a geometric bound on
//! the term ratio.

use crate::series::{Truncation, TruncationReport};
use crate::special::log_gamma;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Validated order for `I_nu`: the series requires `nu > -1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu <= -0.5 {
            return Err(Error::Domain(format!(
                "Bessel order must exceed -1/2, got {nu}"
            )));
        }
        Ok(BesselOrder(nu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `ln I_nu(x)` for `x >= 0` together with the series report.
///
/// Returns `-inf` at `x = 0` for positive order (`I_nu(0) = 0`).
pub(crate) fn log_bessel_i(nu: f64, x: f64, trunc: Truncation) -> Result<(f64, TruncationReport)> {
    debug_assert!(nu > -0.5);
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("bessel_i requires x >= 0, got {x}")));
    }
    if x == 0.0 {
        let ln = if nu == 0.0 { 0.0 } else { f64::NEG_INFINITY };
        return Ok((
            ln,
            TruncationReport {
                terms_used: 1,
                tail_bound: 0.0,
            },
        ));
    }
    let q = x * x / 4.0;
    let ln_lead = nu * (x / 2.0).ln() - log_gamma(nu + 1.0)?;
    // series normalized by the leading term; all terms positive
    let mut sum = CompensatedSum::new();
    let mut term = 1.0;
    let mut m = 0usize;
    loop {
        sum.add(term);
        let mf = m as f64;
        let next = term * q / ((mf + 1.0) * (nu + mf + 1.0));
        // ratio decreases in m, so the sup over the tail is the next ratio
        let ratio = q / ((mf + 2.0) * (nu + mf + 2.0));
        if ratio < 1.0 {
            let tail = next / (1.0 - ratio);
            if tail <= trunc.tol * sum.value() {
                return Ok((
                    ln_lead + sum.value().ln(),
                    TruncationReport {
                        terms_used: m + 1,
                        tail_bound: tail,
                    },
                ));
            }
        }
        m += 1;
        if m >= trunc.max_terms {
            return Err(Error::Truncation {
                terms: m,
                tail_bound: next,
            });
        }
        term = next;
    }
}

/// Modified Bessel function `I_nu(x)` for `x >= 0`.
pub fn bessel_i(order: BesselOrder, x: f64, trunc: Truncation) -> Result<f64> {
    let (ln, _) = log_bessel_i(order.get(), x, trunc)?;
    Ok(ln.exp())
}

pub(crate) fn normalized_bessel_series(
    alpha: f64,
    u: f64,
    trunc: Truncation,
) -> Result<(f64, TruncationReport)> {
    if !alpha.is_finite() || alpha <= -0.5 {
        return Err(Error::Domain(format!(
            "normalized Bessel order must exceed -1/2, got {alpha}"
        )));
    }
    let q = u * u / 4.0;
    let mut sum = CompensatedSum::new();
    let mut term = 1.0;
    let mut j = 0usize;
    loop {
        sum.add(term);
        let jf = j as f64;
        let next = term * q / ((jf + 1.0) * (alpha + jf + 1.0));
        let ratio = q / ((jf + 2.0) * (alpha + jf + 2.0));
        if ratio < 1.0 {
            let tail = next / (1.0 - ratio);
            if tail <= trunc.tol * sum.value() {
                return Ok((
                    sum.value(),
                    TruncationReport {
                        terms_used: j + 1,
                        tail_bound: tail,
                    },
                ));
            }
        }
        j += 1;
        if j >= trunc.max_terms {
            return Err(Error::Truncation {
                terms: j,
                tail_bound: next,
            });
        }
        term = next;
    }
}

/// Normalized modified Bessel function
///
/// ```text
/// NI_alpha(u) = Gamma(alpha+1) (2/u)^alpha I_alpha(u)
///             = sum_{j >= 0} (u/2)^(2j) / (j! (alpha+1)_j)
/// ```
///
/// Even in `u`, with `NI_alpha(0) = 1` exactly.
pub fn normalized_bessel_i(alpha: f64, u: f64, trunc: Truncation) -> Result<f64> {
    normalized_bessel_series(alpha, u, trunc).map(|(v, _)| v)
}

/// Verifies the power Neumann expansion
///
/// ```text
/// (R/2)^nu = sum_{j >= 0} (-1)^j (nu + 2j) Gamma(nu + j) / j! * I_{nu+2j}(R)
/// ```
///
/// for `nu > 0`, `R > 0`, to `trunc.tol` relative. The `nu = 0` endpoint
/// is excluded: the `j = 0` coefficient carries a pole of `Gamma`.
pub fn power_neumann_check(nu: f64, r: f64, trunc: Truncation) -> Result<bool> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(Error::Domain(format!(
            "power Neumann check requires nu > 0, got {nu}"
        )));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::Domain(format!(
            "power Neumann check requires R > 0, got {r}"
        )));
    }
    let target = (r / 2.0).powf(nu);
    let inner = Truncation {
        tol: (trunc.tol * 1e-2).max(1e-16),
        max_terms: trunc.max_terms,
    };
    let mut sum = CompensatedSum::new();
    let mut prev_mag = f64::INFINITY;
    let mut decreasing = 0usize;
    for j in 0..trunc.max_terms {
        let jf = j as f64;
        let order = nu + 2.0 * jf;
        let (ln_i, _) = log_bessel_i(order, r, inner)?;
        let ln_mag = order.ln() + log_gamma(nu + jf)? - log_gamma(jf + 1.0)? + ln_i;
        let mag = ln_mag.exp();
        let term = if j % 2 == 0 { mag } else { -mag };
        sum.add(term);
        decreasing = if mag < prev_mag { decreasing + 1 } else { 0 };
        prev_mag = mag;
        // alternating series: once terms decrease, the first neglected
        // term bounds the tail
        if decreasing >= 2 && mag <= 0.5 * trunc.tol * target {
            let diff = (sum.value() - target).abs();
            return Ok(diff <= trunc.tol * target);
        }
    }
    Err(Error::Truncation {
        terms: trunc.max_terms,
        tail_bound: prev_mag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::pochhammer;

    fn t() -> Truncation {
        // tight enough that truncation is invisible next to the asserts
        Truncation {
            tol: 1e-15,
            max_terms: 10_000,
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn order_validation() {
        assert!(BesselOrder::new(-0.5).is_err());
        assert!(BesselOrder::new(-0.49).is_ok());
    }

    #[test]
    fn bessel_at_zero() {
        assert_eq!(
            bessel_i(BesselOrder::new(0.0).unwrap(), 0.0, t()).unwrap(),
            1.0
        );
        assert_eq!(
            bessel_i(BesselOrder::new(2.5).unwrap(), 0.0, t()).unwrap(),
            0.0
        );
    }

    #[test]
    fn bessel_half_order_closed_form() {
        // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
        for &x in &[0.25, 1.0, 4.0, 10.0] {
            let got = bessel_i(BesselOrder::new(0.5).unwrap(), x, t()).unwrap();
            let expect = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sinh();
            assert!(rel(got, expect) < 1e-14, "x={x}");
        }
    }

    #[test]
    fn bessel_stable_under_tighter_tolerance() {
        let coarse = Truncation {
            tol: 1e-8,
            max_terms: 10_000,
        };
        let fine = Truncation {
            tol: 1e-15,
            max_terms: 10_000,
        };
        let a = bessel_i(BesselOrder::new(3.5).unwrap(), 2.0, coarse).unwrap();
        let b = bessel_i(BesselOrder::new(3.5).unwrap(), 2.0, fine).unwrap();
        assert!(rel(a, b) < 1e-8);
        assert!(rel(a, b) > 0.0 || a == b);
    }

    #[test]
    fn bessel_rejects_negative_argument() {
        assert!(bessel_i(BesselOrder::new(1.0).unwrap(), -1.0, t()).is_err());
    }

    #[test]
    fn bessel_term_cap() {
        let tight = Truncation {
            tol: 1e-12,
            max_terms: 2,
        };
        assert!(matches!(
            bessel_i(BesselOrder::new(0.0).unwrap(), 8.0, tight),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn normalized_bessel_at_zero_is_one() {
        for &alpha in &[-0.4, 0.0, 0.5, 3.2] {
            assert_eq!(normalized_bessel_i(alpha, 0.0, t()).unwrap(), 1.0);
        }
    }

    #[test]
    fn normalized_bessel_half_order() {
        // NI_{1/2}(u) = sinh(u)/u
        let got = normalized_bessel_i(0.5, 1.0, t()).unwrap();
        assert!(rel(got, 1f64.sinh()) < 1e-14);
    }

    #[test]
    fn normalized_bessel_consistent_with_bessel() {
        // NI_alpha(u) = Gamma(alpha+1) (2/u)^alpha I_alpha(u)
        let (alpha, u) = (1.7, 3.2);
        let a = normalized_bessel_i(alpha, u, t()).unwrap();
        let i = bessel_i(BesselOrder::new(alpha).unwrap(), u, t()).unwrap();
        let b = (log_gamma(alpha + 1.0).unwrap() + alpha * (2.0 / u).ln()).exp() * i;
        assert!(rel(a, b) < 1e-13);
    }

    #[test]
    fn normalized_bessel_is_even() {
        let a = normalized_bessel_i(0.8, 2.3, t()).unwrap();
        let b = normalized_bessel_i(0.8, -2.3, t()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn power_neumann_examples() {
        // series sums to (R/2)^nu
        assert!(power_neumann_check(2.0, 1.0, t()).unwrap());
        assert!(power_neumann_check(3.0, 4.0, t()).unwrap());
        assert!(power_neumann_check(0.5, 0.5, t()).unwrap());
    }

    #[test]
    fn power_neumann_excludes_zero_order() {
        assert!(power_neumann_check(0.0, 1.0, t()).is_err());
    }

    #[test]
    fn pochhammer_form_of_series_prefactor() {
        // sanity for the normalized series denominator: (alpha+1)_j j! grows
        let p = pochhammer(1.5, 3) * pochhammer(1.0, 3);
        assert_eq!(p, 1.5 * 2.5 * 3.5 * 6.0);
    }
}

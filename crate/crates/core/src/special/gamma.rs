//! Log-gamma and Pochhammer (rising factorial) symbols.

use crate::dd::{self, Dd};
use crate::{Error, Result};

/// Natural logarithm of the gamma function for `x > 0`.
///
/// Backed by the C-library `lgamma` algorithm, which keeps the result
/// accurate in a relative sense near the zeros at `x = 1` and `x = 2`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(libm::lgamma(x))
}

/// Rising factorial `(x)_m = x (x+1) ... (x+m-1)`; `1` for `m = 0`.
pub fn pochhammer(x: f64, m: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..m {
        acc *= x + i as f64;
    }
    acc
}

/// Rising factorial in double-double precision.
pub(crate) fn pochhammer_dd(x: Dd, m: u32) -> Dd {
    let mut acc = dd::ONE;
    for i in 0..m {
        acc *= x + i as f64;
    }
    acc
}

/// Checks the dimidiation split `(x)_{2l} = 4^l (x/2)_l ((1+x)/2)_l`
/// by direct evaluation of both products, to 1e-12 relative.
pub fn dimidiation_check(x: f64, l: u32) -> bool {
    let lhs = pochhammer(x, 2 * l);
    let rhs = 4f64.powi(l as i32) * pochhammer(x / 2.0, l) * pochhammer((1.0 + x) / 2.0, l);
    (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn log_gamma_known_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        let half = log_gamma(0.5).unwrap();
        assert!(rel(half, std::f64::consts::PI.sqrt().ln()) < 1e-15);
        let ten = log_gamma(10.0).unwrap();
        assert!(rel(ten, 362880f64.ln()) < 1e-15);
    }

    #[test]
    fn log_gamma_wide_range_against_recurrence() {
        // lgamma(x + 1) = lgamma(x) + ln(x), spot-checked across the domain
        for &x in &[1e-3, 0.37, 1.5, 12.0, 345.0, 1e6] {
            let a = log_gamma(x + 1.0).unwrap();
            let b = log_gamma(x).unwrap() + x.ln();
            assert!(
                (a - b).abs() <= 1e-13 * a.abs().max(1.0),
                "x={x}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn log_gamma_rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-3.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn pochhammer_basic() {
        assert_eq!(pochhammer(2.0, 3), 24.0);
        assert_eq!(pochhammer(0.5, 0), 1.0);
        assert_eq!(pochhammer(1.0, 5), 120.0);
    }

    #[test]
    fn pochhammer_rearrangement_identity() {
        // (2k+j+m)_m (2k)_{j+m} = (2k)_{j+2m}
        let (k, j, m) = (1.5, 2u32, 3u32);
        let two_k = 2.0 * k;
        let lhs = pochhammer(two_k + (j + m) as f64, m) * pochhammer(two_k, j + m);
        let rhs = pochhammer(two_k, j + 2 * m);
        assert!(rel(lhs, rhs) < 1e-13);
    }

    #[test]
    fn dimidiation_examples() {
        assert!(dimidiation_check(3.0, 2));
        // (3)_4 = 3*4*5*6 = 360 on both sides
        assert_eq!(pochhammer(3.0, 4), 360.0);
        assert!(dimidiation_check(1.0, 0));
        assert!(dimidiation_check(0.7, 5));
    }

    #[test]
    fn pochhammer_dd_matches_f64_on_exact_cases() {
        let a = pochhammer_dd(Dd::from(2.0), 6);
        assert_eq!(a.value(), pochhammer(2.0, 6));
    }
}

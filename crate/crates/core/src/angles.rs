//! Multiple angles `theta_s = (xi + 2 pi s)/n` and their cosines
//! `b_s = cos theta_s` — the preimages of `xi` under the n-fold covering
//! of the unit circle — together with their symmetric-function structure.
//!
//! The striking fact driving everything downstream: every elementary
//! symmetric function `e_m(b_1, ..., b_n)` with `m < n` is a constant
//! independent of `xi`; only `e_n` carries `cos xi`.

use crate::dd::{cos_dd, Dd};
use crate::special::reverse_chebyshev;
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// The angles and cosines attached to a dihedral order `n` and `xi`.
#[derive(Debug, Clone)]
pub struct AngleSet {
    pub n: u32,
    pub xi: f64,
    pub thetas: Vec<f64>,
    pub cosines: Vec<f64>,
}

impl AngleSet {
    /// Builds `theta_s = (xi + 2 pi s)/n` and `b_s = cos theta_s` for
    /// `s = 1..=n`. Angles and cosines are formed in double-double and
    /// rounded once, so `b_s` is the correctly rounded cosine of the
    /// exact angle (the triangular inversion amplifies cosine errors by
    /// many orders of magnitude).
    pub fn new(n: u32, xi: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!("angle set needs n >= 1, got {n}")));
        }
        if !(0.0..=std::f64::consts::PI).contains(&xi) {
            return Err(Error::Domain(format!("xi must lie in [0, pi], got {xi}")));
        }
        let pairs = angle_cosines_dd(n, xi);
        Ok(AngleSet {
            n,
            xi,
            thetas: pairs.iter().map(|(t, _)| t.value()).collect(),
            cosines: pairs.iter().map(|(_, c)| c.value()).collect(),
        })
    }
}

/// Two-word angles and cosines for `s = 1..=n`.
pub(crate) fn angle_cosines_dd(n: u32, xi: f64) -> Vec<(Dd, Dd)> {
    // 2 pi as a double word
    let tau = Dd::new(std::f64::consts::TAU, 2.4492935982947064e-16);
    (1..=n)
        .map(|s| {
            let theta = (tau * s as f64 + xi) / n as f64;
            (theta, cos_dd(theta))
        })
        .collect()
}

/// Elementary symmetric functions `e_0..e_n` of the given values, by the
/// incremental product recurrence (coefficients of `prod (z + v_s)`).
pub fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for (count, &v) in values.iter().enumerate() {
        for m in (1..=count + 1).rev() {
            e[m] += v * e[m - 1];
        }
    }
    e
}

/// Power sums `p_0..p_max_order`, `p_j = sum_s v_s^j`.
pub fn power_sums(values: &[f64], max_order: u32) -> Vec<f64> {
    (0..=max_order)
        .map(|j| {
            let mut s = CompensatedSum::new();
            for &v in values {
                s.add(v.powi(j as i32));
            }
            s.value()
        })
        .collect()
}

/// Elementary and power-sum profile of a value set, orders `0..=n`.
#[derive(Debug, Clone)]
pub struct SymmetricProfile {
    pub elementary: Vec<f64>,
    pub power_sums: Vec<f64>,
}

pub fn symmetric_profile(values: &[f64]) -> SymmetricProfile {
    SymmetricProfile {
        elementary: elementary_symmetric(values),
        power_sums: power_sums(values, values.len() as u32),
    }
}

impl SymmetricProfile {
    /// Largest residual of the Newton identities
    /// `m e_m = sum_{j=1}^{m} (-1)^(j-1) e_{m-j} p_j` over `1 <= m <= n`.
    pub fn newton_residual(&self) -> f64 {
        let n = self.elementary.len() - 1;
        let mut worst = 0.0f64;
        for m in 1..=n {
            let mut s = CompensatedSum::new();
            for j in 1..=m {
                let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                s.add(sign * self.elementary[m - j] * self.power_sums[j]);
            }
            worst = worst.max((m as f64 * self.elementary[m] - s.value()).abs());
        }
        worst
    }
}

/// Closed-form prediction for `e_m(b_1, ..., b_n)`, `n >= 2`:
///
/// - `m = n`, odd `n`:  `cos(xi) / 2^(n-1)`
/// - `m = n`, even `n`: `((-1)^(n/2) - cos xi) / 2^(n-1)`
/// - odd `m < n`:       `0`
/// - even `m = 2j < n`: `n (-1)^j (n-j-1)! / (2^(2j) j! (n-2j)!)`
///
/// The even case is stated for `j < [n/2]`; for odd `n` the boundary
/// `m = n - 1` (i.e. `j = [n/2]`) uses the same formula, which the test
/// suite confirms numerically.
pub fn predicted_elementary(n: u32, xi: f64, m: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "predicted e_m needs n >= 2, got {n}"
        )));
    }
    if m > n {
        return Err(Error::Domain(format!("order m = {m} exceeds n = {n}")));
    }
    let scale = 2f64.powi(1 - (n as i32));
    if m == n {
        return Ok(if n % 2 == 1 {
            scale * xi.cos()
        } else {
            let sign = if (n / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
            scale * (sign - xi.cos())
        });
    }
    if m % 2 == 1 {
        return Ok(0.0);
    }
    if m == 0 {
        return Ok(1.0);
    }
    let j = m / 2;
    // n (n-j-1)! / (2^(2j) j! (n-2j)!) as a product of small ratios
    let mut v = n as f64 / 4f64.powi(j as i32);
    // (n-j-1)!/(n-2j)! = (n-2j+1)(n-2j+2)...(n-j-1)
    for i in (n - 2 * j + 1)..=(n - j - 1) {
        v *= i as f64;
    }
    for i in 1..=j {
        v /= i as f64;
    }
    Ok(if j.is_multiple_of(2) { v } else { -v })
}

/// `cos^p(theta)` through the finite linearization sums
///
/// ```text
/// cos^(2j)(t)   = 2^(-2j) (binom(2j, j) + 2 sum_{s=1}^{j} binom(2j, j-s) cos(2 s t))
/// cos^(2j+1)(t) = 2^(-2j) sum_{s=0}^{j} binom(2j+1, j-s) cos((2s+1) t)
/// ```
pub fn cos_power_linearized(theta: f64, p: u32) -> f64 {
    let j = p / 2;
    let mut s = CompensatedSum::new();
    if p.is_multiple_of(2) {
        s.add(crate::comb::binomial(p, j));
        for i in 1..=j {
            s.add(2.0 * crate::comb::binomial(p, j - i) * (2.0 * i as f64 * theta).cos());
        }
    } else {
        for i in 0..=j {
            s.add(crate::comb::binomial(p, j - i) * ((2.0 * i as f64 + 1.0) * theta).cos());
        }
    }
    s.value() / 4f64.powi(j as i32)
}

/// Checks the factorization
///
/// ```text
/// 2 z^n T_n(1/z) - 2 cos(xi) z^n = 2^n prod_{s=1}^{n} (1 - b_s z)
/// ```
///
/// at the given sample points, to `1e-11 * max(1, |rhs|)`.
pub fn factorization_check(n: u32, xi: f64, z_samples: &[f64]) -> Result<bool> {
    let poly = reverse_chebyshev(n)?;
    let angles = AngleSet::new(n, xi)?;
    let cx = xi.cos();
    for &z in z_samples {
        let lhs = 2.0 * poly.eval(z) - 2.0 * cx * z.powi(n as i32);
        let mut rhs = 2f64.powi(n as i32);
        for &b in &angles.cosines {
            rhs *= 1.0 - b * z;
        }
        if (lhs - rhs).abs() > 1e-11 * rhs.abs().max(1.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Residuals of the root property: each `1/b_s` with `b_s != 0` is a root
/// of `2 z^n T_n(1/z) - 2 cos(xi) z^n`. The residual is evaluated in the
/// scaled form `b_s^n * P(1/b_s)` (multiplying through by `b_s^n`), which
/// stays finite for small cosines; near-zero cosines are skipped.
pub fn root_residuals(n: u32, xi: f64) -> Result<Vec<f64>> {
    let poly = reverse_chebyshev(n)?;
    let angles = AngleSet::new(n, xi)?;
    let cx = xi.cos();
    let mut residuals = Vec::new();
    for &b in &angles.cosines {
        if b.abs() < 1e-8 {
            continue;
        }
        // b^n * sum_j c_{2j} b^{-2j} = sum_j c_{2j} b^{n-2j}
        let mut s = CompensatedSum::new();
        for (pow, &c) in poly.coeffs().iter().enumerate() {
            if c != 0.0 {
                s.add(c * b.powi(n as i32 - pow as i32));
            }
        }
        residuals.push((2.0 * s.value() - 2.0 * cx).abs());
    }
    Ok(residuals)
}

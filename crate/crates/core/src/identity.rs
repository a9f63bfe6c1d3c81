//! Degree-by-degree identities behind the Horn representation.
//!
//! Matching coefficients of the series and its Horn form yields, for each
//! total degree `N`, the identity
//!
//! ```text
//! sum_{2m + nj = N} n (j+k) Gamma(nk) / (2^N m! Gamma(n(j+k)+m+1)) C_j^(k)(cos xi)
//!   = sum_{j_1+...+j_n = N} (k)_{j_1} ... (k)_{j_n} / (nk)_N
//!     * b_1^{j_1}/j_1! ... b_n^{j_n}/j_n!
//! ```
//!
//! whose left side depends on `xi` only through `cos xi` while the right
//! side runs over the multiple-angle cosines `b_s`. For even `n` the rows
//! `N = nM` form a unit-diagonal lower-triangular system in the
//! Gegenbauer values; inverting it expresses `C_M^(k)(cos xi)` through
//! scaled composition sums — the triangular-inversion representation.

use crate::angles::{angle_cosines_dd, AngleSet};
use crate::comb::{binomial, for_each_combination, for_each_composition};
use crate::dd::{self, Dd};
use crate::special::{pochhammer, pochhammer_dd, GegenbauerSeq, GegenbauerSeqDd};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// One degree of the identity: both sides and their disagreement.
#[derive(Debug, Clone, Copy)]
pub struct IdentityReport {
    pub n: u32,
    pub k: f64,
    pub xi: f64,
    pub degree: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    /// `abs_diff / max(1, |lhs|)` — the acceptance metric.
    pub rel_diff: f64,
}

fn check_params(n: u32, k: f64) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain(format!("identity needs n >= 1, got {n}")));
    }
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!("identity needs k > 0, got {k}")));
    }
    Ok(())
}

/// Left (Gegenbauer) side of the degree-`N` identity. The gamma ratio is
/// reduced to the Pochhammer product `(nk)_{nj+m+1}`, so each term is a
/// plain finite product. Empty index sets sum to zero.
pub fn gegenbauer_side(n: u32, k: f64, xi: f64, degree: u32) -> Result<f64> {
    check_params(n, k)?;
    let nf = n as f64;
    let nk = nf * k;
    let cx = xi.cos();
    let mut seq = GegenbauerSeq::new(k, cx);
    let mut sum = CompensatedSum::new();
    let scale = 2f64.powi(-(degree as i32));
    let mut j = 0u32;
    while u64::from(n) * u64::from(j) <= u64::from(degree) {
        let c_j = seq.next_value();
        let rem = degree - n * j;
        if rem.is_multiple_of(2) {
            let m = rem / 2;
            let mut term = nf * (j as f64 + k) * c_j * scale;
            term /= pochhammer(nk, n * j + m + 1);
            for i in 2..=m {
                term /= i as f64;
            }
            sum.add(term);
        }
        j += 1;
    }
    Ok(sum.value())
}

/// Right (composition) side of the degree-`N` identity, enumerated over
/// the compositions of `N` into `n` parts with per-variable coefficient
/// tables `(k)_t b_s^t / t!`.
pub fn composition_side(n: u32, k: f64, xi: f64, degree: u32) -> Result<f64> {
    check_params(n, k)?;
    let angles = AngleSet::new(n, xi)?;
    let tables: Vec<Vec<f64>> = angles
        .cosines
        .iter()
        .map(|&b| {
            let mut col = Vec::with_capacity(degree as usize + 1);
            let mut v = 1.0;
            col.push(v);
            for t in 0..degree {
                let tf = t as f64;
                v *= (k + tf) * b / (tf + 1.0);
                col.push(v);
            }
            col
        })
        .collect();
    let mut sum = CompensatedSum::new();
    for_each_composition(n as usize, degree, |parts| {
        let mut term = 1.0;
        for (s, &j_s) in parts.iter().enumerate() {
            term *= tables[s][j_s as usize];
        }
        sum.add(term);
    });
    Ok(sum.value() / pochhammer(n as f64 * k, degree))
}

/// Evaluates both sides for every degree `0..=max_degree`.
pub fn verify_degree_identity(
    n: u32,
    k: f64,
    xi: f64,
    max_degree: u32,
) -> Result<Vec<IdentityReport>> {
    let mut reports = Vec::with_capacity(max_degree as usize + 1);
    for degree in 0..=max_degree {
        let lhs = gegenbauer_side(n, k, xi, degree)?;
        let rhs = composition_side(n, k, xi, degree)?;
        let abs_diff = (lhs - rhs).abs();
        reports.push(IdentityReport {
            n,
            k,
            xi,
            degree,
            lhs,
            rhs,
            abs_diff,
            rel_diff: abs_diff / lhs.abs().max(1.0),
        });
    }
    Ok(reports)
}

/// Resumming the degree identities recovers the series itself:
/// `sum_N R^N * gegenbauer_side(n,k,xi,N) = n Gamma(nk) F(n,k;R,xi)`.
/// Returns the partial sum up to `max_degree`.
pub fn resummed_gegenbauer_side(n: u32, k: f64, xi: f64, r: f64, max_degree: u32) -> Result<f64> {
    let mut sum = CompensatedSum::new();
    let mut r_pow = 1.0;
    for degree in 0..=max_degree {
        sum.add(r_pow * gegenbauer_side(n, k, xi, degree)?);
        r_pow *= r;
    }
    Ok(sum.value())
}

/// Coefficients of the triangular-inversion representation: for even
/// order `n = 2q`,
///
/// ```text
/// C_M^(k)(cos xi) = sum_{j=0}^{M} a_j * 2^(2qj)
///                   * sum_{|composition| = 2qj} prod_s (k)_{j_s} b_s^{j_s} / j_s!
/// ```
///
/// with `a_M = 1` by construction (unit diagonal).
#[derive(Debug, Clone)]
pub struct InversionCoeffs {
    pub q: u32,
    pub k: f64,
    pub degree: u32,
    /// `a_0 ..= a_M` in the scaled composition basis.
    pub coeffs: Vec<f64>,
    /// Largest coefficient magnitude met during the solve. Values above
    /// 1e12 flag an ill-conditioned system: the reconstruction then leans
    /// on the extended-precision internals.
    pub growth: f64,
    coeffs_dd: Vec<Dd>,
    xi: f64,
}

/// Off-diagonal entry of the triangular system relating the rows
/// `N = 2q M'` of the degree identity to Gegenbauer values:
/// `T(row, col) = 2q (col + k) (B)_{q(row-col)-1} / (q(row-col))!`
/// with `B = q(row + col) + 2qk + 1`. Diagonal entries are 1.
fn triangular_entry(q: u32, k: f64, row: u32, col: u32) -> Dd {
    debug_assert!(col <= row);
    if col == row {
        return dd::ONE;
    }
    let gap = q * (row - col);
    let shift = u64::from(q) * (u64::from(row) + u64::from(col)) + 1;
    let b = Dd::from(k) * (2.0 * q as f64) + shift as f64;
    let mut t = pochhammer_dd(b, gap - 1) * (2.0 * q as f64) * (Dd::from(k) + col as f64);
    for i in 1..=gap {
        t = t / i as f64;
    }
    t
}

/// Solves the unit-diagonal triangular system for the representation
/// coefficients by back-substitution on the transposed system.
pub fn triangular_inversion(q: u32, k: f64, xi: f64, degree: u32) -> Result<InversionCoeffs> {
    if q < 1 {
        return Err(Error::Domain(format!("inversion needs q >= 1, got {q}")));
    }
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!("inversion needs k > 0, got {k}")));
    }
    if u64::from(q) * u64::from(degree) > 1 << 20 {
        return Err(Error::Domain(format!(
            "inversion size q*M = {q}*{degree} beyond practical range"
        )));
    }
    let m = degree as usize;
    let mut y = vec![dd::ZERO; m + 1];
    y[m] = dd::ONE;
    let mut growth = 1.0f64;
    for col in (0..m).rev() {
        let mut acc = dd::ZERO;
        for (row, y_row) in y.iter().enumerate().take(m + 1).skip(col + 1) {
            acc += triangular_entry(q, k, row as u32, col as u32) * *y_row;
        }
        y[col] = -acc;
        growth = growth.max(y[col].value().abs());
    }
    Ok(InversionCoeffs {
        q,
        k,
        degree,
        coeffs: y.iter().map(|v| v.value()).collect(),
        growth,
        coeffs_dd: y,
        xi,
    })
}

/// Composition power sums `P(N) = sum_{|j| = N} prod_s (k)_{j_s} b_s^{j_s} / j_s!`
/// for `N = 0..=max_total`, via prefix convolution in double-double.
fn composition_power_series_dd(k: f64, bs: &[Dd], max_total: usize) -> Vec<Dd> {
    let m = bs.len();
    let mut tables: Vec<Vec<Dd>> = bs
        .iter()
        .map(|&b| {
            let mut col = Vec::with_capacity(max_total + 1);
            let mut v = dd::ONE;
            col.push(v);
            for t in 0..max_total {
                let tf = t as f64;
                v = v * (Dd::from(k) + tf) * b / (tf + 1.0);
                col.push(v);
            }
            col
        })
        .collect();
    for s in 1..m {
        let (left, right) = tables.split_at_mut(s);
        let prev = &left[s - 1];
        let cur = &mut right[0];
        let mut out = vec![dd::ZERO; max_total + 1];
        for (n_total, slot) in out.iter_mut().enumerate() {
            let mut acc = dd::ZERO;
            for t in 0..=n_total {
                acc += prev[t] * cur[n_total - t];
            }
            *slot = acc;
        }
        *cur = out;
    }
    tables.pop().unwrap_or_else(|| vec![dd::ONE])
}

impl InversionCoeffs {
    /// `a_M`, which the construction pins to exactly 1.
    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// The angle the coefficients were built for.
    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// Whether coefficient growth crossed the 1e12 warning threshold.
    pub fn ill_conditioned(&self) -> bool {
        self.growth > 1e12
    }

    /// Reconstructs `C_M^(k)(cos xi)` from the scaled composition sums.
    /// The cosines enter in two-word precision: the scaled basis values
    /// grow like `4^(qM)` and the solve can amplify cosine rounding far
    /// past the reconstruction target.
    pub fn reconstruct(&self) -> Result<f64> {
        if self.xi < 0.0 || self.xi > std::f64::consts::PI {
            return Err(Error::Domain(format!("xi out of range: {}", self.xi)));
        }
        let n = 2 * self.q;
        let cosines: Vec<Dd> = angle_cosines_dd(n, self.xi)
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        let max_total = (n * self.degree) as usize;
        let power = composition_power_series_dd(self.k, &cosines, max_total);
        let mut acc = dd::ZERO;
        for (j, a) in self.coeffs_dd.iter().enumerate() {
            let scale = Dd::from(2.0).powi(2 * self.q * j as u32);
            acc += *a * scale * power[(n as usize) * j];
        }
        Ok(acc.value())
    }
}

/// Checks the `n = 2` inverse expansion of a monomial in Gegenbauer
/// polynomials, in the form scaled through by `Gamma(2k)`:
///
/// ```text
/// ((1+x)/2)^M = (k+1/2)_M M! sum_{j=0}^{M} 2 (j+k) C_j^(k)(x)
///               / ((M-j)! (2k)_{M+j+1})
/// ```
///
/// The two sides are compared relative to the larger of their magnitudes
/// and the total term magnitude of the right side (the natural scale when
/// the sum telescopes to zero, e.g. at `x = -1`).
pub fn monomial_expansion_check(k: f64, degree: u32, x: f64) -> Result<bool> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!(
            "expansion check needs k > 0, got {k}"
        )));
    }
    let m = degree;
    let lhs = ((Dd::from(x) + 1.0) / 2.0).powi(m);
    let pre = {
        let mut p = pochhammer_dd(Dd::from(k) + 0.5, m);
        for i in 2..=m {
            p = p * i as f64;
        }
        p
    };
    let mut seq = GegenbauerSeqDd::new(k, Dd::from(x));
    let mut sum = dd::ZERO;
    let mut magnitude = 0.0f64;
    for j in 0..=m {
        let c_j = seq.next_value();
        let mut term = c_j * (Dd::from(k) + j as f64) * 2.0;
        term = term / pochhammer_dd(Dd::from(2.0 * k), m + j + 1);
        for i in 2..=(m - j) {
            term = term / i as f64;
        }
        sum += term;
        magnitude += (pre * term).value().abs();
    }
    let rhs = pre * sum;
    let diff = (lhs - rhs).abs().value();
    let scale = lhs.value().abs().max(rhs.value().abs()).max(magnitude);
    Ok(diff <= 1e-11 * scale.max(f64::MIN_POSITIVE))
}

/// Subset-product representation of Gegenbauer polynomials for integer
/// parameter `k >= 1`:
///
/// ```text
/// C_j^(k)(cos xi) = 2^j sum_{1 <= m_1 < ... < m_j <= j+k-1}
///                   prod_s (cos xi + cos(m_s pi / (j+k)))
/// ```
///
/// Enumerates `binom(j+k-1, j)` subsets; errors out when that count
/// exceeds `1e7`.
pub fn subset_product_representation(j: u32, k: u32, xi: f64) -> Result<f64> {
    if k < 1 {
        return Err(Error::Domain(format!(
            "subset representation needs integer k >= 1, got {k}"
        )));
    }
    let pool = u64::from(j) + u64::from(k) - 1;
    const CAP: f64 = 1e7;
    // the index pool itself is table-allocated, so cap it alongside the
    // subset count
    if pool > CAP as u64 {
        return Err(Error::CombinatorialSize {
            size: pool as f64,
            cap: CAP,
        });
    }
    let pool = pool as u32;
    let count = binomial(pool, j);
    if count > CAP {
        return Err(Error::CombinatorialSize {
            size: count,
            cap: CAP,
        });
    }
    let cx = xi.cos();
    let denom = (j + k) as f64;
    let cos_table: Vec<f64> = (1..=pool)
        .map(|m| (m as f64 * std::f64::consts::PI / denom).cos())
        .collect();
    let mut sum = dd::ZERO;
    for_each_combination(pool as usize, j as usize, |subset| {
        let mut prod = dd::ONE;
        for &idx in subset {
            prod *= Dd::from(cx) + cos_table[idx];
        }
        sum += prod;
    });
    Ok((sum * 2f64.powi(j as i32)).value())
}

//! Gegenbauer (ultraspherical) and Chebyshev polynomials.
//!
//! The three-term recurrence is the default Gegenbauer evaluator; the
//! explicit hypergeometric sum and the even-degree quadratic
//! transformation are independent routes kept as oracles. The explicit
//! routes cancel heavily near `x = 1` for large degree, so they
//! accumulate in double-double internally.

use crate::dd::{self, Dd};
use crate::{Error, Result};

fn check_parameter(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!(
            "Gegenbauer parameter must be positive, got {k}"
        )));
    }
    Ok(())
}

/// Streaming evaluation of `C_0, C_1, C_2, ...` at a fixed point, via
/// `j C_j = 2(j+k-1) x C_{j-1} - (j+2k-2) C_{j-2}`.
pub(crate) struct GegenbauerSeq {
    k: f64,
    x: f64,
    j: u32,
    prev: f64,  // C_{j-1}
    prev2: f64, // C_{j-2}
}

impl GegenbauerSeq {
    pub(crate) fn new(k: f64, x: f64) -> Self {
        GegenbauerSeq {
            k,
            x,
            j: 0,
            prev: 0.0,
            prev2: 0.0,
        }
    }

    pub(crate) fn next_value(&mut self) -> f64 {
        let c = match self.j {
            0 => 1.0,
            1 => 2.0 * self.k * self.x,
            j => {
                let jf = j as f64;
                (2.0 * (jf + self.k - 1.0) * self.x * self.prev
                    - (jf + 2.0 * self.k - 2.0) * self.prev2)
                    / jf
            }
        };
        self.prev2 = self.prev;
        self.prev = c;
        self.j += 1;
        c
    }
}

/// Same recurrence carried in double-double.
pub(crate) struct GegenbauerSeqDd {
    k: f64,
    x: Dd,
    j: u32,
    prev: Dd,
    prev2: Dd,
}

impl GegenbauerSeqDd {
    pub(crate) fn new(k: f64, x: Dd) -> Self {
        GegenbauerSeqDd {
            k,
            x,
            j: 0,
            prev: dd::ZERO,
            prev2: dd::ZERO,
        }
    }

    pub(crate) fn next_value(&mut self) -> Dd {
        let c = match self.j {
            0 => dd::ONE,
            1 => self.x * (2.0 * self.k),
            j => {
                let jf = j as f64;
                // coefficients assembled in Dd: k + integer rounds in f64
                let a = self.x * self.prev * (Dd::from(self.k) + (jf - 1.0)) * 2.0;
                let b = self.prev2 * (Dd::from(2.0 * self.k) + (jf - 2.0));
                (a - b) / jf
            }
        };
        self.prev2 = self.prev;
        self.prev = c;
        self.j += 1;
        c
    }
}

/// Gegenbauer polynomial `C_j^(k)(x)` by the three-term recurrence.
pub fn gegenbauer(j: u32, k: f64, x: f64) -> Result<f64> {
    check_parameter(k)?;
    let mut seq = GegenbauerSeq::new(k, x);
    let mut c = 0.0;
    for _ in 0..=j {
        c = seq.next_value();
    }
    Ok(c)
}

/// Gegenbauer polynomial by the explicit finite sum
///
/// ```text
/// C_j^(k)(x) = sum_{m=0}^{j} (-1)^(m+j) (2k+j)_m (2k)_j
///              / ((j-m)! m! (k+1/2)_m) * ((1+x)/2)^m
/// ```
///
/// Serves as an independent oracle for [`gegenbauer`].
///
/// Evaluated at `-|x|` and reflected through the symmetry
/// `C_j^(k)(x) = (-1)^j C_j^(k)(-x)`, which keeps the expansion variable
/// `(1+x)/2` at most 1/2 and the alternating sum well conditioned.
pub fn gegenbauer_explicit(j: u32, k: f64, x: f64) -> Result<f64> {
    check_parameter(k)?;
    if x > 0.0 {
        let reflected = gegenbauer_explicit(j, k, -x)?;
        return Ok(if j.is_multiple_of(2) {
            reflected
        } else {
            -reflected
        });
    }
    let u = (Dd::from(x) + 1.0) / 2.0;
    // term_0 = (-1)^j (2k)_j / j!, built as a product of ratios
    let mut term = dd::ONE;
    for i in 0..j {
        term = term * (Dd::from(2.0 * k) + i as f64) / (i as f64 + 1.0);
    }
    if j % 2 == 1 {
        term = -term;
    }
    let mut acc = term;
    let k_half = Dd::from(k) + 0.5;
    for m in 0..j {
        let mf = m as f64;
        // ratio of consecutive terms, sign flip included
        term = term * u * (Dd::from(2.0 * k) + (j + m) as f64) * ((j - m) as f64);
        term = -(term / ((k_half + mf) * (mf + 1.0)));
        acc += term;
    }
    Ok(acc.value())
}

/// Even-degree Gegenbauer polynomial through the quadratic transformation
/// of the Gauss hypergeometric series:
///
/// ```text
/// C_{2j}^(2 nu)(x) = (-1)^j (2 nu)_j / j! * 2F1(-j, j + 2 nu; 1/2; x^2)
/// ```
///
/// Equals `gegenbauer(2j, 2nu, x)`; third independent route.
pub fn gegenbauer_even_quadratic(j: u32, nu: f64, x: f64) -> Result<f64> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(Error::Domain(format!(
            "quadratic-transformation route requires nu > 0, got {nu}"
        )));
    }
    let x2 = Dd::from(x) * Dd::from(x);
    let mut pre = dd::ONE; // (-1)^j (2nu)_j / j!
    for i in 0..j {
        pre = pre * (Dd::from(2.0 * nu) + i as f64) / (i as f64 + 1.0);
    }
    if j % 2 == 1 {
        pre = -pre;
    }
    // terminating 2F1 in x^2
    let mut term = dd::ONE;
    let mut acc = dd::ONE;
    for m in 0..j {
        let mf = m as f64;
        term = term * x2 * (mf - j as f64) * (Dd::from(2.0 * nu) + (j + m) as f64);
        term = term / ((0.5 + mf) * (mf + 1.0));
        acc += term;
    }
    Ok((pre * acc).value())
}

/// Chebyshev polynomial of the first kind `T_n(x)`.
pub fn chebyshev_t(n: u32, x: f64) -> f64 {
    let mut prev2 = 1.0;
    let mut prev = x;
    match n {
        0 => 1.0,
        1 => x,
        _ => {
            let mut c = 0.0;
            for _ in 2..=n {
                c = 2.0 * x * prev - prev2;
                prev2 = prev;
                prev = c;
            }
            c
        }
    }
}

/// Dense polynomial coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs {
    coeffs: Vec<f64>,
}

impl PolyCoeffs {
    /// Trims trailing zeros so the leading coefficient is nonzero unless
    /// the polynomial is identically zero.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        PolyCoeffs { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
    }
}

/// Coefficients of the reverse Chebyshev polynomial `z^n T_n(1/z)`:
///
/// ```text
/// z^n T_n(1/z) = (n/2) sum_{j=0}^{[n/2]} (-1)^j 2^(n-2j) (n-j-1)!
///                / (j! (n-2j)!) * z^(2j)
/// ```
///
/// Only even powers appear; the coefficients are integers.
pub fn reverse_chebyshev(n: u32) -> Result<PolyCoeffs> {
    if n < 1 {
        return Err(Error::Domain("reverse Chebyshev needs n >= 1".into()));
    }
    let top = n / 2;
    let mut coeffs = vec![0.0; (2 * top + 1) as usize];
    let mut c = 2f64.powi(n as i32 - 1);
    coeffs[0] = c;
    for j in 1..=top {
        let jf = j as f64;
        let nf = n as f64;
        c *= -(nf - 2.0 * jf + 2.0) * (nf - 2.0 * jf + 1.0) / (4.0 * jf * (nf - jf));
        // mathematically an integer; snap off the rounding residue
        c = c.round();
        coeffs[(2 * j) as usize] = c;
    }
    Ok(PolyCoeffs::new(coeffs))
}

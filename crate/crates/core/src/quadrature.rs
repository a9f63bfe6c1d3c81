//! Integration on `[-1, 1]` against the weight `(1 - z^2)^(k-1)`.
//!
//! The weight is a symmetric Jacobi weight with both exponents `k - 1`,
//! so Gauss-Jacobi nodes and weights absorb it analytically: polynomial
//! integrands of degree `<= 2p - 1` integrate exactly with `p` points and
//! the endpoint singularity for `k < 1` is never sampled. Nodes and
//! weights come from the Golub-Welsch eigenproblem of the Jacobi
//! recurrence, solved by the implicit-shift QL sweep with only the first
//! eigenvector row accumulated.

use crate::series::Truncation;
use crate::special::{log_gamma, normalized_bessel_i, pochhammer};
use crate::sum::CompensatedSum;
use crate::{Error, Result};

/// Quadrature method selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureMethod {
    /// Nodes and weights for the exact Jacobi weight (default).
    GaussJacobi,
    /// Recursive bisection with Gauss-Legendre panels applied to the
    /// weighted integrand. Interior nodes only; useful as a cross-check
    /// for k >= 1 where the weight is bounded.
    AdaptiveSubdivision,
}

/// Method, base point count, and target relative tolerance.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub method: QuadratureMethod,
    pub points: usize,
    pub target_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            method: QuadratureMethod::GaussJacobi,
            points: 48,
            target_tol: 1e-11,
        }
    }
}

impl QuadratureSpec {
    pub fn new(method: QuadratureMethod, points: usize, target_tol: f64) -> Result<Self> {
        if points < 2 {
            return Err(Error::Domain(format!(
                "quadrature needs points >= 2, got {points}"
            )));
        }
        if !target_tol.is_finite() || target_tol <= 0.0 {
            return Err(Error::Domain(
                "quadrature tolerance must be positive".into(),
            ));
        }
        Ok(QuadratureSpec {
            method,
            points,
            target_tol,
        })
    }
}

/// A fixed Gauss rule for the weight `(1-z)^alpha (1+z)^beta` on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct JacobiRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl JacobiRule {
    /// Rule for the symmetric weight `(1 - z^2)^(k-1)`.
    pub fn gegenbauer_weight(points: usize, k: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Domain(format!(
                "weight exponent requires k > 0, got {k}"
            )));
        }
        Self::new(points, k - 1.0, k - 1.0)
    }

    /// Gauss-Legendre rule (unit weight).
    pub fn legendre(points: usize) -> Result<Self> {
        Self::new(points, 0.0, 0.0)
    }

    fn new(points: usize, alpha: f64, beta: f64) -> Result<Self> {
        if points < 2 {
            return Err(Error::Domain(format!(
                "rule needs points >= 2, got {points}"
            )));
        }
        if !(alpha.is_finite() && alpha > -1.0) || !(beta.is_finite() && beta > -1.0) {
            return Err(Error::Domain("Jacobi exponents must exceed -1".into()));
        }
        let p = points;
        let ab = alpha + beta;
        let mut diag = vec![0.0; p];
        let mut off = vec![0.0; p]; // off[i] couples i and i+1
        diag[0] = (beta - alpha) / (ab + 2.0);
        for (i, d) in diag.iter_mut().enumerate().skip(1) {
            let two_i = 2.0 * i as f64;
            *d = (beta * beta - alpha * alpha) / ((two_i + ab) * (two_i + ab + 2.0));
        }
        if p > 1 {
            // i = 1 has a removable singularity in the generic formula
            off[0] = (4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)))
                .sqrt();
        }
        for i in 2..p {
            let fi = i as f64;
            let denom = 2.0 * fi + ab;
            let sq = 4.0 * fi * (fi + alpha) * (fi + beta) * (fi + ab)
                / (denom * denom * (denom + 1.0) * (denom - 1.0));
            off[i - 1] = sq.sqrt();
        }
        let mut first_row = vec![0.0; p];
        first_row[0] = 1.0;
        tridiagonal_eigen_first_row(&mut diag, &mut off, &mut first_row)?;

        let mu0 = ((ab + 1.0) * 2f64.ln() + log_gamma(alpha + 1.0)? + log_gamma(beta + 1.0)?
            - log_gamma(ab + 2.0)?)
        .exp();
        let mut pairs: Vec<(f64, f64)> = diag
            .iter()
            .zip(&first_row)
            .map(|(&x, &v)| (x, mu0 * v * v))
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

        let (mut nodes, mut weights): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        if alpha == beta {
            // the rule is symmetric; remove the eigen solver's asymmetric noise
            for i in 0..p / 2 {
                let j = p - 1 - i;
                let x = 0.5 * (nodes[j] - nodes[i]);
                nodes[i] = -x;
                nodes[j] = x;
                let w = 0.5 * (weights[i] + weights[j]);
                weights[i] = w;
                weights[j] = w;
            }
            if p % 2 == 1 {
                nodes[p / 2] = 0.0;
            }
        }
        Ok(JacobiRule { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `sum_i w_i f(x_i)`; the weight function is implicit in the rule.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let mut s = CompensatedSum::new();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            s.add(w * f(x));
        }
        s.value()
    }
}

/// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating
/// only the first row of the eigenvector matrix (all that Golub-Welsch
/// weights need). `diag` returns the eigenvalues, unordered.
fn tridiagonal_eigen_first_row(
    diag: &mut [f64],
    off: &mut [f64],
    first_row: &mut [f64],
) -> Result<()> {
    let n = diag.len();
    if n == 0 {
        return Ok(());
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 50 {
                return Err(Error::Quadrature(
                    "eigenvalue sweep did not converge".into(),
                ));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflowed = false;
            for i in (l..m).rev() {
                let mut f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = first_row[i + 1];
                first_row[i + 1] = s * first_row[i] + c * f;
                first_row[i] = c * first_row[i] - s * f;
            }
            if underflowed {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

/// `int_{-1}^{1} f(z) (1 - z^2)^(k-1) dz` to the spec's relative target,
/// by point-doubling (Gauss-Jacobi) or recursive bisection.
pub fn integrate_jacobi_weight(
    f: impl Fn(f64) -> f64,
    k: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    integrate_jacobi_weight_detailed(f, k, spec).map(|(v, _, _)| v)
}

/// As [`integrate_jacobi_weight`], also returning the point count of the
/// accepted rule and the last doubling difference.
pub fn integrate_jacobi_weight_detailed(
    f: impl Fn(f64) -> f64,
    k: f64,
    spec: &QuadratureSpec,
) -> Result<(f64, usize, f64)> {
    if !k.is_finite() || k < 0.05 {
        return Err(Error::Domain(format!(
            "weight exponent k = {k} below supported range (k >= 0.05)"
        )));
    }
    match spec.method {
        QuadratureMethod::GaussJacobi => {
            let mut points = spec.points.max(2);
            let mut prev = JacobiRule::gegenbauer_weight(points, k)?.integrate(&f);
            loop {
                let next_points = points * 2;
                if next_points > 4096 {
                    return Err(Error::Quadrature(format!(
                        "no convergence to {:e} within 4096 points",
                        spec.target_tol
                    )));
                }
                let cur = JacobiRule::gegenbauer_weight(next_points, k)?.integrate(&f);
                let diff = (cur - prev).abs();
                if diff <= spec.target_tol * cur.abs().max(1.0) {
                    return Ok((cur, next_points, diff));
                }
                points = next_points;
                prev = cur;
            }
        }
        QuadratureMethod::AdaptiveSubdivision => {
            let rule = JacobiRule::legendre(spec.points.max(8))?;
            let weighted = |z: f64| {
                let w = (1.0 - z * z).max(0.0).powf(k - 1.0);
                f(z) * w
            };
            // error budget proportional to panel length, measured against
            // a global scale, so refinement concentrates at the endpoints
            let scale = panel_estimate(&weighted, &rule, -1.0, 1.0).abs().max(1.0);
            let mut panels = 0usize;
            let v = bisect_panel(
                &weighted,
                &rule,
                -1.0,
                1.0,
                0.5 * spec.target_tol * scale,
                0,
                &mut panels,
            )?;
            Ok((v, panels * rule.len(), spec.target_tol * v.abs()))
        }
    }
}

fn panel_estimate(f: &impl Fn(f64) -> f64, rule: &JacobiRule, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut s = CompensatedSum::new();
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        s.add(w * f(mid + half * x));
    }
    half * s.value()
}

fn bisect_panel(
    f: &impl Fn(f64) -> f64,
    rule: &JacobiRule,
    a: f64,
    b: f64,
    budget_per_unit: f64,
    depth: usize,
    panels: &mut usize,
) -> Result<f64> {
    *panels += 1;
    if depth > 48 || *panels > 1 << 17 {
        return Err(Error::Quadrature("subdivision budget exhausted".into()));
    }
    let whole = panel_estimate(f, rule, a, b);
    let mid = 0.5 * (a + b);
    let left = panel_estimate(f, rule, a, mid);
    let right = panel_estimate(f, rule, mid, b);
    let split = left + right;
    if (whole - split).abs() <= budget_per_unit * (b - a) {
        return Ok(split);
    }
    let l = bisect_panel(f, rule, a, mid, budget_per_unit, depth + 1, panels)?;
    let r = bisect_panel(f, rule, mid, b, budget_per_unit, depth + 1, panels)?;
    Ok(l + r)
}

/// Closed form of the normalized even moment:
///
/// ```text
/// Gamma(k+1/2) / (sqrt(pi) Gamma(k)) int z^(2m) (1-z^2)^(k-1) dz
///   = (1/2)_m / (k+1/2)_m
/// ```
pub fn normalized_even_moment(k: f64, m: u32) -> f64 {
    pochhammer(0.5, m) / pochhammer(k + 0.5, m)
}

/// Normalization constant `Gamma(k+1/2) / (sqrt(pi) Gamma(k))` of the
/// weight `(1-z^2)^(k-1)`.
pub fn weight_normalization(k: f64) -> Result<f64> {
    Ok((log_gamma(k + 0.5)? - log_gamma(k)?).exp() / std::f64::consts::PI.sqrt())
}

/// Checks the Poisson integral representation of the normalized Bessel
/// function:
///
/// ```text
/// Gamma(k+1/2) / (2 sqrt(pi) Gamma(k) Gamma(2k)) int e^(u z) (1-z^2)^(k-1) dz
///   = NI_{k-1/2}(u) / (2 Gamma(2k))
/// ```
///
/// to 1e-10 relative.
pub fn poisson_bessel_check(k: f64, u: f64, spec: &QuadratureSpec) -> Result<bool> {
    let norm = weight_normalization(k)?;
    let gamma_2k = log_gamma(2.0 * k)?.exp();
    let lhs = norm / (2.0 * gamma_2k) * integrate_jacobi_weight(|z| (u * z).exp(), k, spec)?;
    let trunc = Truncation {
        tol: 1e-14,
        max_terms: 10_000,
    };
    let rhs = normalized_bessel_i(k - 0.5, u, trunc)? / (2.0 * gamma_2k);
    Ok((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(rhs.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
    }

    #[test]
    fn constant_integrand_unit_weight() {
        // k = 1: plain integral of 1 over [-1, 1]
        let spec = QuadratureSpec::default();
        let v = integrate_jacobi_weight(|_| 1.0, 1.0, &spec).unwrap();
        assert!(rel(v, 2.0) < 1e-14);
    }

    #[test]
    fn even_moments_match_closed_form() {
        let spec = QuadratureSpec::default();
        for &k in &[0.3, 0.5, 1.0, 2.0, 3.5] {
            let norm = weight_normalization(k).unwrap();
            for m in 0..=10u32 {
                let v = norm * integrate_jacobi_weight(|z| z.powi(2 * m as i32), k, &spec).unwrap();
                let want = normalized_even_moment(k, m);
                assert!(rel(v, want) < 1e-12, "k={k} m={m}: {v} vs {want}");
            }
        }
    }

    #[test]
    fn fixed_rule_is_polynomially_exact() {
        // p points integrate z^(2m) exactly while 2m <= 2p-1
        for &k in &[0.3, 1.0, 2.5] {
            let p = 8;
            let rule = JacobiRule::gegenbauer_weight(p, k).unwrap();
            let norm = weight_normalization(k).unwrap();
            for m in 0..=(p as u32 - 1) {
                let v = norm * rule.integrate(|z| z.powi(2 * m as i32));
                assert!(rel(v, normalized_even_moment(k, m)) < 1e-13, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn odd_integrands_vanish() {
        for &k in &[0.3, 1.7] {
            let rule = JacobiRule::gegenbauer_weight(33, k).unwrap();
            let v = rule.integrate(|z| z * z * z * (1.1 + z * z));
            assert!(v.abs() < 1e-14, "k={k}: {v}");
        }
    }

    #[test]
    fn nodes_symmetric_and_weights_positive() {
        let rule = JacobiRule::gegenbauer_weight(25, 0.3).unwrap();
        let p = rule.len();
        for i in 0..p {
            assert_eq!(rule.nodes()[i], -rule.nodes()[p - 1 - i]);
            assert!(rule.weights()[i] > 0.0);
            assert!(rule.nodes()[i].abs() < 1.0);
        }
        assert_eq!(rule.nodes()[p / 2], 0.0);
    }

    #[test]
    fn chebyshev_case_has_known_total_mass() {
        // k = 1/2 is the Chebyshev weight; total mass is pi
        let rule = JacobiRule::gegenbauer_weight(16, 0.5).unwrap();
        let total: f64 = rule.weights().iter().sum();
        assert!(rel(total, std::f64::consts::PI) < 1e-13);
    }

    #[test]
    fn doubling_converges_for_entire_integrand() {
        let spec = QuadratureSpec::default();
        let v = integrate_jacobi_weight(|z| (0.8 * z).exp(), 1.5, &spec).unwrap();
        // Poisson form: integral = sqrt(pi) Gamma(k) / Gamma(k+1/2) * NI_{k-1/2}(c)
        let trunc = Truncation::default();
        let want =
            normalized_bessel_i(1.0, 0.8, trunc).unwrap() / weight_normalization(1.5).unwrap();
        assert!(rel(v, want) < 1e-12);
    }

    #[test]
    fn subdivision_agrees_with_gauss_jacobi() {
        let gj = QuadratureSpec::default();
        let sub = QuadratureSpec {
            method: QuadratureMethod::AdaptiveSubdivision,
            points: 16,
            target_tol: 1e-10,
        };
        for &k in &[1.0, 1.5, 2.5] {
            let a = integrate_jacobi_weight(|z| (1.3 * z).exp() + z * z, k, &gj).unwrap();
            let b = integrate_jacobi_weight(|z| (1.3 * z).exp() + z * z, k, &sub).unwrap();
            assert!(rel(a, b) < 1e-9, "k={k}: {a} vs {b}");
        }
    }

    #[test]
    fn poisson_representation_holds() {
        let spec = QuadratureSpec::default();
        assert!(poisson_bessel_check(1.0, 0.0, &spec).unwrap());
        assert!(poisson_bessel_check(1.0, 1.0, &spec).unwrap());
        assert!(poisson_bessel_check(0.6, 2.5, &spec).unwrap());
        assert!(poisson_bessel_check(3.5, 7.0, &spec).unwrap());
    }

    #[test]
    fn small_k_rejected() {
        let spec = QuadratureSpec::default();
        assert!(integrate_jacobi_weight(|_| 1.0, 0.01, &spec).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(QuadratureMethod::GaussJacobi, 1, 1e-10).is_err());
        assert!(QuadratureSpec::new(QuadratureMethod::GaussJacobi, 8, -1.0).is_err());
    }
}

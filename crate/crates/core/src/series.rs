//! The five evaluation routes for the dihedral Bessel series
//!
//! ```text
//! F(n, k; R, xi) = (2/R)^(n k) sum_{j >= 0} (j+k) I_{n(j+k)}(R) C_j^(k)(cos xi)
//! ```
//!
//! Routes: direct summation, the `n = 1` exponential closed form, the
//! `n = 2` normalized-Bessel closed form, the `n = 4` weighted integral,
//! and the Horn `Phi_2` confluent hypergeometric series in the multiple
//! angle cosines. Every route reports its certified truncation tail.
//!
//! The direct route expands each Bessel function by its ascending series
//! and sums the resulting double series with the gamma ratios reduced to
//! integer-shift Pochhammer products:
//!
//! ```text
//! F = (1/Gamma(nk+1)) sum_{j,m} (j+k) C_j^(k)(cos xi) (R/2)^(nj+2m)
//!                                / (m! (nk+1)_{nj+m})
//! ```
//!
//! At `xi` near `pi` the outer sum cancels to a value exponentially
//! smaller than its largest term, so the accumulation runs in
//! double-double. The stopping rule is certified: with `tail` the
//! geometric-factorial bound on everything not yet summed, iteration
//! stops only once `tail <= tol * (|partial| - tail)`, which implies the
//! final relative error is below `tol` regardless of cancellation still
//! to come.

use crate::angles::AngleSet;
use crate::dd::{self, Dd};
use crate::quadrature::{integrate_jacobi_weight_detailed, weight_normalization, QuadratureSpec};
use crate::special::{log_gamma, normalized_bessel_series, GegenbauerSeq, GegenbauerSeqDd};
use crate::{Error, Result};

/// Parameters `(n, k, R, xi)` of the series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub n: u32,
    pub k: f64,
    pub r: f64,
    pub xi: f64,
}

impl SeriesParams {
    pub fn new(n: u32, k: f64, r: f64, xi: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!(
                "series order n must be >= 1, got {n}"
            )));
        }
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Domain(format!(
                "series parameter k must be positive, got {k}"
            )));
        }
        if !r.is_finite() || r <= 0.0 {
            return Err(Error::Domain(format!(
                "series argument R must be positive, got {r}"
            )));
        }
        if !(0.0..=std::f64::consts::PI).contains(&xi) {
            return Err(Error::Domain(format!("xi must lie in [0, pi], got {xi}")));
        }
        Ok(SeriesParams { n, k, r, xi })
    }
}

/// Relative tolerance and term cap for infinite-series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Truncation {
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation {
            tol: 1e-12,
            max_terms: 10_000,
        }
    }
}

impl Truncation {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::Domain(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        if max_terms < 1 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        Ok(Truncation { tol, max_terms })
    }
}

/// Achieved tail bound and term count of a truncated evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct TruncationReport {
    pub terms_used: usize,
    pub tail_bound: f64,
}

/// Which representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Direct,
    ClosedN1,
    ClosedN2,
    IntegralN4,
    HornPhi2,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Direct,
        Route::ClosedN1,
        Route::ClosedN2,
        Route::IntegralN4,
        Route::HornPhi2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::ClosedN1 => "closed_n1",
            Route::ClosedN2 => "closed_n2",
            Route::IntegralN4 => "integral_n4",
            Route::HornPhi2 => "horn_phi2",
        }
    }

    /// Whether this route exists for the given series order.
    pub fn applicable(self, n: u32) -> bool {
        match self {
            Route::ClosedN1 => n == 1,
            Route::ClosedN2 => n == 2,
            Route::IntegralN4 => n == 4,
            Route::Direct | Route::HornPhi2 => true,
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Route::Direct),
            "closed_n1" => Ok(Route::ClosedN1),
            "closed_n2" => Ok(Route::ClosedN2),
            "integral_n4" => Ok(Route::IntegralN4),
            "horn_phi2" => Ok(Route::HornPhi2),
            other => Err(Error::Domain(format!("unknown route '{other}'"))),
        }
    }
}

/// A value tagged with its route and truncation report.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: f64,
    pub route: Route,
    pub report: TruncationReport,
}

impl EvalResult {
    fn checked(value: f64, route: Route, report: TruncationReport) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite(route.name().into()));
        }
        Ok(EvalResult {
            value,
            route,
            report,
        })
    }
}

/// A composition `(j_1, ..., j_n)` of total degree `sum j_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    parts: Vec<u32>,
}

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> Self {
        MultiIndex { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// All compositions of `total` into `parts` nonnegative integers.
pub fn multi_indices(parts: usize, total: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    crate::comb::for_each_composition(parts, total, |c| out.push(MultiIndex::new(c.to_vec())));
    out
}

/// Positive hypergeometric-type series `sum_{m >= 0} q^m / (m! (base)_m)`
/// in double-double, summed to `rel_tol` with a geometric tail bound.
fn ratio_series_dd(q: Dd, base: Dd, rel_tol: f64, cap: usize) -> Result<Dd> {
    debug_assert!(q.value() >= 0.0);
    let mut acc = dd::ONE;
    let mut term = dd::ONE;
    let mut m = 0usize;
    loop {
        let mf = m as f64;
        let next = term * q / ((base + mf) * (mf + 1.0));
        let r_hat = q.value() / ((base.value() + mf + 1.0) * (mf + 2.0));
        if r_hat < 1.0 {
            let tail = next.value() / (1.0 - r_hat);
            if tail <= rel_tol * acc.value() {
                return Ok(acc);
            }
        }
        acc += next;
        term = next;
        m += 1;
        if m >= cap {
            return Err(Error::Truncation {
                terms: m,
                tail_bound: next.value(),
            });
        }
    }
}

/// Direct summation of the series definition.
///
/// The tail beyond the last retained `j` is bounded through
/// `|C_j^(k)| <= (2k)_j / j!` and `I_nu(R) <= (R/2)^nu e^R / Gamma(nu+1)`.
pub fn eval_direct(p: &SeriesParams, trunc: Truncation) -> Result<EvalResult> {
    let n = p.n as f64;
    let k = p.k;
    let nk = Dd::from(k) * n; // exact two-word product
    let half_r = Dd::from(p.r / 2.0);
    let q = half_r * half_r;
    let pow_step = half_r.powi(p.n);
    let pow_step_f = pow_step.value();
    let cos_xi = p.xi.cos();

    let mut gegenbauer = GegenbauerSeqDd::new(k, Dd::from(cos_xi));
    let mut pow = dd::ONE; // (R/2)^(n j)
    let mut poch = dd::ONE; // (nk + 1)_(n j)
    let mut sum = dd::ZERO;
    let mut bound = k * p.r.exp(); // tail majorant of term j
    let inner_cap = trunc.max_terms.max(1000);

    let mut j = 0usize;
    loop {
        let jf = j as f64;
        let c_j = gegenbauer.next_value();
        let lead = c_j * pow * (Dd::from(k) + jf) / poch;
        let base = nk + (n * jf + 1.0);
        let inner = ratio_series_dd(q, base, 1e-30, inner_cap)?;
        let contribution = lead * inner;
        #[cfg(debug_assertions)]
        if cos_xi == 1.0 {
            debug_assert!(
                contribution.value() >= 0.0,
                "terms must stay positive at xi = 0"
            );
        }
        sum += contribution;

        // majorant of term j+1 and a sup bound on later ratios
        let mut poch_block = 1.0;
        for i in 1..=p.n {
            poch_block *= nk.value() + n * jf + i as f64;
        }
        let next_bound =
            bound * ((jf + 1.0 + k) / (jf + k)) * ((2.0 * k + jf) / (jf + 1.0)) * pow_step_f
                / poch_block;
        let mut next_block = 1.0;
        for i in 1..=p.n {
            next_block *= nk.value() + n * (jf + 1.0) + i as f64;
        }
        let rho = ((jf + 2.0 + k) / (jf + 1.0 + k))
            * ((2.0 * k + jf + 1.0) / (jf + 2.0)).max(1.0)
            * pow_step_f
            / next_block;
        if rho < 1.0 {
            let tail = next_bound / (1.0 - rho);
            let settled = (sum.value().abs() - tail).max(f64::MIN_POSITIVE);
            if tail <= trunc.tol * settled {
                let norm = (-log_gamma(nk.value() + 1.0)?).exp();
                return EvalResult::checked(
                    sum.value() * norm,
                    Route::Direct,
                    TruncationReport {
                        terms_used: j + 1,
                        tail_bound: tail * norm,
                    },
                );
            }
        }
        j += 1;
        if j >= trunc.max_terms {
            return Err(Error::Truncation {
                terms: j,
                tail_bound: next_bound,
            });
        }
        bound = next_bound;
        pow *= pow_step;
        for i in 1..=p.n {
            poch *= nk + (n * jf + i as f64);
        }
    }
}

/// Closed form for `n = 1`: `F = e^(R cos xi) / Gamma(k)`.
pub fn eval_closed_n1(p: &SeriesParams) -> Result<EvalResult> {
    if p.n != 1 {
        return Err(Error::Domain(format!(
            "closed_n1 route requires n = 1, got n = {}",
            p.n
        )));
    }
    let value = (p.r * p.xi.cos() - log_gamma(p.k)?).exp();
    EvalResult::checked(
        value,
        Route::ClosedN1,
        TruncationReport {
            terms_used: 1,
            tail_bound: 0.0,
        },
    )
}

/// Closed form for `n = 2`: `F = NI_{k-1/2}(R cos(xi/2)) / (2 Gamma(2k))`.
pub fn eval_closed_n2(p: &SeriesParams, trunc: Truncation) -> Result<EvalResult> {
    if p.n != 2 {
        return Err(Error::Domain(format!(
            "closed_n2 route requires n = 2, got n = {}",
            p.n
        )));
    }
    let u = p.r * (p.xi / 2.0).cos();
    let (ni, report) = normalized_bessel_series(p.k - 0.5, u, trunc)?;
    let value = 0.5 * (-log_gamma(2.0 * p.k)?).exp() * ni;
    EvalResult::checked(value, Route::ClosedN2, report)
}

/// Weighted-integral form for `n = 4`:
///
/// ```text
/// F = Gamma(k+1/2) / (4 sqrt(pi) Gamma(k) Gamma(4k))
///     * int_{-1}^{1} NI_{2k-1/2}(R sqrt((1 + z cos(xi/2))/2)) (1-z^2)^(k-1) dz
/// ```
pub fn eval_integral_n4(
    p: &SeriesParams,
    quad: &QuadratureSpec,
    trunc: Truncation,
) -> Result<EvalResult> {
    if p.n != 4 {
        return Err(Error::Domain(format!(
            "integral_n4 route requires n = 4, got n = {}",
            p.n
        )));
    }
    let c = (p.xi / 2.0).cos();
    let inner = Truncation {
        tol: (trunc.tol.min(quad.target_tol) * 1e-2).max(1e-15),
        max_terms: trunc.max_terms,
    };
    let failure = std::cell::RefCell::new(None);
    let integrand = |z: f64| {
        let u = p.r * ((1.0 + z * c) / 2.0).max(0.0).sqrt();
        match normalized_bessel_series(2.0 * p.k - 0.5, u, inner) {
            Ok((v, _)) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let (integral, points, est) = integrate_jacobi_weight_detailed(integrand, p.k, quad)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let pre = (log_gamma(p.k + 0.5)? - log_gamma(p.k)? - log_gamma(4.0 * p.k)?).exp()
        / (4.0 * std::f64::consts::PI.sqrt());
    EvalResult::checked(
        pre * integral,
        Route::IntegralN4,
        TruncationReport {
            terms_used: points,
            tail_bound: pre * est,
        },
    )
}

/// Horn confluent hypergeometric series of `m` variables,
///
/// ```text
/// Phi_2^(m)(b_1, ..., b_m; g; x_1, ..., x_m)
///   = sum over multi-indices j of prod_s (b_s)_{j_s} x_s^{j_s} / j_s!
///     all divided by (g)_{|j|}
/// ```
///
/// enumerated by total degree. Each degree shell is the convolution
/// coefficient of the per-variable power series `sum_t (b_s)_t x_s^t/t!`,
/// accumulated in double-double; the tail is certified by the majorant
/// `X^N (B)_N / ((g)_N N!)` with `X = max |x_s|` and `B = sum b_s`.
pub fn horn_phi2(betas: &[f64], gamma: f64, xs: &[f64], trunc: Truncation) -> Result<f64> {
    horn_phi2_detailed(betas, gamma, xs, trunc).map(|(v, _)| v)
}

pub(crate) fn horn_phi2_detailed(
    betas: &[f64],
    gamma: f64,
    xs: &[f64],
    trunc: Truncation,
) -> Result<(f64, TruncationReport)> {
    let m = betas.len();
    if m == 0 || xs.len() != m {
        return Err(Error::Domain(
            "Horn series needs matching, nonempty parameter and argument lists".into(),
        ));
    }
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(Error::Domain(format!(
            "Horn denominator parameter must be positive: {gamma}"
        )));
    }
    if let Some(b) = betas.iter().find(|b| !(b.is_finite() && **b > 0.0)) {
        return Err(Error::Domain(format!(
            "Horn numerator parameters must be positive: {b}"
        )));
    }
    if let Some(x) = xs.iter().find(|x| !x.is_finite()) {
        return Err(Error::Domain(format!("Horn arguments must be finite: {x}")));
    }

    let x_max = xs.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let beta_total: f64 = betas.iter().sum();

    // per-variable series coefficients and their running prefix convolutions
    let mut tables: Vec<Vec<Dd>> = vec![vec![dd::ONE]; m];
    let mut levels: Vec<Vec<Dd>> = vec![vec![dd::ONE]; m];
    let mut gamma_poch = dd::ONE; // (gamma)_N
    let mut sum = dd::ZERO;
    let mut majorant = 1.0f64; // X^N (B)_N / ((gamma)_N N!)

    let mut degree = 0usize;
    loop {
        if degree > 0 {
            let nf = degree as f64;
            for (s, table) in tables.iter_mut().enumerate() {
                let prev = table[degree - 1];
                table.push(prev * (Dd::from(betas[s]) + (nf - 1.0)) * xs[s] / nf);
            }
            for s in 0..m {
                let coeff = if s == 0 {
                    tables[0][degree]
                } else {
                    let mut acc = dd::ZERO;
                    for t in 0..=degree {
                        acc += levels[s - 1][t] * tables[s][degree - t];
                    }
                    acc
                };
                levels[s].push(coeff);
            }
            gamma_poch *= Dd::from(gamma) + (nf - 1.0);
        }
        sum += levels[m - 1][degree] / gamma_poch;

        let nf = degree as f64;
        let next_majorant = majorant * x_max * (beta_total + nf) / ((gamma + nf) * (nf + 1.0));
        let rho = ((beta_total + nf + 1.0) / (gamma + nf + 1.0)).max(1.0) * x_max / (nf + 2.0);
        if rho < 1.0 {
            let tail = next_majorant / (1.0 - rho);
            let settled = (sum.value().abs() - tail).max(f64::MIN_POSITIVE);
            if tail <= trunc.tol * settled {
                return Ok((
                    sum.value(),
                    TruncationReport {
                        terms_used: degree + 1,
                        tail_bound: tail,
                    },
                ));
            }
        }
        degree += 1;
        if degree >= trunc.max_terms {
            return Err(Error::Truncation {
                terms: degree,
                tail_bound: next_majorant,
            });
        }
        majorant = next_majorant;
    }
}

/// The Horn route: `F = Phi_2^(n)(k, ..., k; nk; R b_1, ..., R b_n) / (n Gamma(nk))`
/// with `b_s` the multiple-angle cosines.
pub fn eval_horn_phi2(p: &SeriesParams, trunc: Truncation) -> Result<EvalResult> {
    let angles = AngleSet::new(p.n, p.xi)?;
    let xs: Vec<f64> = angles.cosines.iter().map(|b| b * p.r).collect();
    let betas = vec![p.k; p.n as usize];
    let nk = p.n as f64 * p.k;
    let (phi, report) = horn_phi2_detailed(&betas, nk, &xs, trunc)?;
    let value = phi * (-log_gamma(nk)?).exp() / p.n as f64;
    EvalResult::checked(value, Route::HornPhi2, report)
}

/// Evaluates one route, validating its applicability for `p.n`.
pub fn eval_route(
    p: &SeriesParams,
    route: Route,
    trunc: Truncation,
    quad: &QuadratureSpec,
) -> Result<EvalResult> {
    if !route.applicable(p.n) {
        return Err(Error::Domain(format!(
            "route {route} does not apply to n = {}",
            p.n
        )));
    }
    match route {
        Route::Direct => eval_direct(p, trunc),
        Route::ClosedN1 => eval_closed_n1(p),
        Route::ClosedN2 => eval_closed_n2(p, trunc),
        Route::IntegralN4 => eval_integral_n4(p, quad, trunc),
        Route::HornPhi2 => eval_horn_phi2(p, trunc),
    }
}

/// Product-formula integral for Gegenbauer polynomials: evaluates
///
/// ```text
/// Gamma(k+1/2) / (sqrt(pi) Gamma(k)) int C_{2j}^(2k)(x z) (1-z^2)^(k-1) dz
/// ```
///
/// which equals `C_j^(k)(2 x^2 - 1)` — degree and parameter double while
/// the argument angle bisects.
pub fn gegenbauer_product_formula(j: u32, k: f64, x: f64, quad: &QuadratureSpec) -> Result<f64> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!(
            "product formula requires k > 0, got {k}"
        )));
    }
    let norm = weight_normalization(k)?;
    let integrand = |z: f64| {
        let mut seq = GegenbauerSeq::new(2.0 * k, x * z);
        let mut c = 0.0;
        for _ in 0..=(2 * j) {
            c = seq.next_value();
        }
        c
    };
    // the integrand is a polynomial of degree 2j: make the base rule exact
    let spec = QuadratureSpec {
        points: quad.points.max(2 * j as usize + 2),
        ..*quad
    };
    let (v, _, _) = integrate_jacobi_weight_detailed(integrand, k, &spec)?;
    Ok(norm * v)
}

//! Property-based invariants across the special-function and series
//! layers: bounds, symmetries, route independence, and truncation
//! soundness on randomized inputs.

use proptest::prelude::*;

use dihedral_bessel::angles::{elementary_symmetric, power_sums, symmetric_profile, AngleSet};
use dihedral_bessel::quadrature::{JacobiRule, QuadratureSpec};
use dihedral_bessel::series::{eval_direct, eval_horn_phi2, horn_phi2, SeriesParams, Truncation};
use dihedral_bessel::special::{
    bessel_i, dimidiation_check, gegenbauer, gegenbauer_even_quadratic, gegenbauer_explicit,
    pochhammer, power_neumann_check, BesselOrder,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

/// `|C_j^(k)(x)| <= C_j^(k)(1) = (2k)_j / j!` on the full grid, with
/// equality at `x = 1`.
#[test]
fn gegenbauer_bound_on_grid() {
    for j in 0..=30u32 {
        for &k in &[0.3, 0.5, 1.0, 2.5] {
            let at_one = pochhammer(2.0 * k, j) / (1..=j).map(f64::from).product::<f64>();
            assert!(rel(gegenbauer(j, k, 1.0).unwrap(), at_one) < 1e-12);
            for i in 0..=20 {
                let x = -1.0 + 0.1 * i as f64;
                let v = gegenbauer(j, k, x).unwrap();
                assert!(v.abs() <= at_one * (1.0 + 1e-12), "j={j} k={k} x={x}");
            }
        }
    }
}

/// All three Gegenbauer routes agree on the full grid.
#[test]
fn gegenbauer_routes_agree_on_grid() {
    for j in 0..=30u32 {
        for &k in &[0.3, 0.5, 1.0, 2.5] {
            let at_one = pochhammer(2.0 * k, j) / (1..=j).map(f64::from).product::<f64>();
            for i in 0..=20 {
                let x = -1.0 + 0.1 * i as f64;
                let a = gegenbauer(j, k, x).unwrap();
                let b = gegenbauer_explicit(j, k, x).unwrap();
                // measured against the polynomial's natural scale near roots
                let scale = a.abs().max(b.abs()).max(1e-3 * at_one);
                assert!(
                    (a - b).abs() <= 1e-11 * scale,
                    "j={j} k={k} x={x}: {a} vs {b}"
                );
                if j % 2 == 0 {
                    let c = gegenbauer_even_quadratic(j / 2, k / 2.0, x).unwrap();
                    assert!((a - c).abs() <= 1e-11 * scale, "quad j={j} k={k} x={x}");
                }
            }
        }
    }
}

/// Partial sums of the generating function converge geometrically:
/// `sum_j C_j^(k)(cos xi) w^j -> (1 - 2 w cos xi + w^2)^(-k)`.
#[test]
fn gegenbauer_generating_function_partial_sums() {
    for &k in &[0.4, 1.0, 2.5] {
        for &xi in &[0.0, 1.0, 2.2, std::f64::consts::PI] {
            for &w in &[0.5, -0.4, 0.25] {
                let cx = xi.cos();
                let closed = (1.0 - 2.0 * w * cx + w * w).powf(-k);
                let mut partial = 0.0;
                let mut err_at_40 = None;
                for j in 0..=60u32 {
                    partial += gegenbauer(j, k, cx).unwrap() * w.powi(j as i32);
                    if j == 40 {
                        err_at_40 = Some((partial - closed).abs());
                    }
                }
                let err_at_60 = (partial - closed).abs();
                assert!(
                    err_at_60 <= 1e-11 * closed.abs().max(1.0),
                    "k={k} xi={xi} w={w}"
                );
                // geometric tail: 20 more terms shrink the error by about
                // |w|^20, less a polynomial factor from C_j^(k)(1) growth,
                // down to the accumulation noise floor
                let floor = 1e-13 * closed.abs().max(1.0);
                let bound = err_at_40.unwrap() * w.abs().powi(14) + floor;
                assert!(err_at_60 <= bound, "k={k} xi={xi} w={w}");
            }
        }
    }
}

/// The power Neumann expansion holds across the stated order/argument grid.
#[test]
fn power_neumann_grid() {
    let trunc = Truncation {
        tol: 1e-11,
        max_terms: 10_000,
    };
    for &nu in &[0.5, 1.0, 2.0, 3.5] {
        for &r in &[0.5, 1.0, 4.0] {
            assert!(power_neumann_check(nu, r, trunc).unwrap(), "nu={nu} R={r}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// C_j^(k)(-x) = (-1)^j C_j^(k)(x)
    #[test]
    fn gegenbauer_parity(j in 0u32..25, k in 0.1f64..4.0, x in -1.0f64..1.0) {
        let plus = gegenbauer(j, k, x).unwrap();
        let minus = gegenbauer(j, k, -x).unwrap();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let scale = plus.abs().max(minus.abs()).max(1e-3);
        prop_assert!((plus - sign * minus).abs() <= 1e-12 * scale);
    }

    /// (x)_{2l} = 4^l (x/2)_l ((1+x)/2)_l for random arguments
    #[test]
    fn dimidiation_random(x in -6.0f64..6.0, l in 0u32..10) {
        prop_assert!(dimidiation_check(x, l));
    }

    /// elementary symmetric functions match the coefficient expansion of
    /// prod (z + v_s) evaluated at a random point
    #[test]
    fn elementary_symmetric_is_characteristic_poly(
        values in prop::collection::vec(-2.0f64..2.0, 1..7),
        z in -1.5f64..1.5,
    ) {
        let e = elementary_symmetric(&values);
        // prod (z + v_s) = sum_m e_m z^(n-m)
        let horner: f64 = e.iter().fold(0.0, |acc, &c| acc * z + c);
        let direct: f64 = values.iter().map(|v| z + v).product();
        // scale by the term magnitudes: the Horner sum may cancel near roots
        let n = values.len() as i32;
        let scale: f64 = e
            .iter()
            .enumerate()
            .map(|(m, &c)| (c * z.powi(n - m as i32)).abs())
            .sum::<f64>()
            .max(1.0);
        prop_assert!((horner - direct).abs() <= 1e-13 * scale);
    }

    /// Newton identities tie power sums to elementary symmetric functions
    /// for arbitrary value sets, not just angle cosines
    #[test]
    fn newton_identities_random_values(
        values in prop::collection::vec(-1.0f64..1.0, 1..8),
    ) {
        let profile = symmetric_profile(&values);
        prop_assert!(profile.newton_residual() < 1e-12);
    }

    /// power sums of degree zero count the values
    #[test]
    fn power_sum_degree_zero(values in prop::collection::vec(-3.0f64..3.0, 0..6)) {
        let p = power_sums(&values, 2);
        prop_assert_eq!(p[0], values.len() as f64);
    }

    /// the angle-set invariants hold for random xi
    #[test]
    fn angle_set_invariants(n in 1u32..9, t in 0.0f64..1.0) {
        let xi = t * std::f64::consts::PI;
        let a = AngleSet::new(n, xi).unwrap();
        prop_assert_eq!(a.cosines.len(), n as usize);
        for (&theta, &b) in a.thetas.iter().zip(&a.cosines) {
            prop_assert!((-1.0..=1.0).contains(&b));
            prop_assert!(((n as f64 * theta).cos() - xi.cos()).abs() < 1e-12);
        }
        if n >= 2 {
            let total: f64 = a.cosines.iter().sum();
            prop_assert!(total.abs() < 1e-13);
        }
    }

    /// Bessel evaluation is stable under tolerance halving: the value
    /// moves by no more than the looser tolerance
    #[test]
    fn bessel_truncation_soundness(nu in 0.0f64..8.0, x in 0.01f64..9.0, t in 1e-12f64..1e-6) {
        let order = BesselOrder::new(nu).unwrap();
        let coarse = bessel_i(order, x, Truncation { tol: t, max_terms: 10_000 }).unwrap();
        let fine = bessel_i(order, x, Truncation { tol: t / 2.0, max_terms: 10_000 }).unwrap();
        prop_assert!(rel(coarse, fine) <= 2.0 * t);
    }

    /// the direct route obeys its certified tolerance when halved
    #[test]
    fn direct_route_truncation_soundness(
        n in 1u32..5,
        k in 0.2f64..3.0,
        r in 0.1f64..6.0,
        t01 in 0.0f64..1.0,
    ) {
        let xi = t01 * std::f64::consts::PI;
        let p = SeriesParams::new(n, k, r, xi).unwrap();
        let tol = 1e-8;
        let coarse = eval_direct(&p, Truncation { tol, max_terms: 10_000 }).unwrap();
        let fine = eval_direct(&p, Truncation { tol: tol / 2.0, max_terms: 10_000 }).unwrap();
        prop_assert!(rel(coarse.value, fine.value) <= 2.0 * tol);
    }

    /// Horn route and direct route agree and collapse the angle
    /// dependence to cos(xi)
    #[test]
    fn horn_and_direct_agree(
        n in 1u32..6,
        k in 0.2f64..3.0,
        r in 0.1f64..5.0,
        t01 in 0.0f64..1.0,
    ) {
        let xi = t01 * std::f64::consts::PI;
        let p = SeriesParams::new(n, k, r, xi).unwrap();
        let trunc = Truncation::default();
        let a = eval_direct(&p, trunc).unwrap().value;
        let b = eval_horn_phi2(&p, trunc).unwrap().value;
        prop_assert!(rel(a, b) <= 1e-9, "{} vs {}", a, b);
    }

    /// degree-1 confluent reduction: Phi_2^(1)(b; g; x) is monotone in x
    /// and equals the Kummer series road-tested against e^x when b = g
    #[test]
    fn horn_single_variable_reduces_to_kummer(b in 0.3f64..3.0, x in -4.0f64..4.0) {
        let v = horn_phi2(&[b], b, &[x], Truncation::default()).unwrap();
        prop_assert!(rel(v, x.exp()) <= 1e-11);
    }

    /// Gauss-Jacobi rules integrate odd monomials to zero and match the
    /// even-moment closed form within machine terms
    #[test]
    fn quadrature_symmetry(k in 0.1f64..4.0, p in 4usize..40) {
        let rule = JacobiRule::gegenbauer_weight(p, k).unwrap();
        let odd = rule.integrate(|z| z * z * z);
        prop_assert!(odd.abs() < 1e-14);
    }

    /// doubling the points never shifts a smooth integral beyond the
    /// target tolerance
    #[test]
    fn quadrature_doubling_stability(k in 0.1f64..3.5, c in -2.0f64..2.0) {
        let spec = QuadratureSpec::default();
        let a = dihedral_bessel::quadrature::integrate_jacobi_weight(
            |z| (c * z).exp(),
            k,
            &spec,
        ).unwrap();
        let spec2 = QuadratureSpec { points: spec.points * 2, ..spec };
        let b = dihedral_bessel::quadrature::integrate_jacobi_weight(
            |z| (c * z).exp(),
            k,
            &spec2,
        ).unwrap();
        prop_assert!(rel(a, b) <= spec.target_tol * 10.0);
    }
}

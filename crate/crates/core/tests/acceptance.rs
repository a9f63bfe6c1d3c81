//! Acceptance suite: every identity the library claims, run on its full
//! parameter grid at the stated tolerance. One test per criterion; each
//! prints a `PASS` line with the worst residual it saw.
//!
//! Relative comparisons against values with exact interior zeros (a
//! Gegenbauer value at a root lands on some grid points) are measured
//! against `max(|a|, |b|, 0.01 * C_j^(k)(1))` — the polynomial's natural
//! scale — so a zero crossing cannot turn roundoff into a fake failure.

use std::process::Command;

use dihedral_bessel::angles::{elementary_symmetric, predicted_elementary, AngleSet};
use dihedral_bessel::identity::{
    composition_side, gegenbauer_side, monomial_expansion_check, subset_product_representation,
    triangular_inversion,
};
use dihedral_bessel::quadrature::{
    integrate_jacobi_weight, normalized_even_moment, weight_normalization, QuadratureSpec,
};
use dihedral_bessel::series::{
    eval_closed_n1, eval_closed_n2, eval_direct, eval_horn_phi2, eval_integral_n4,
    gegenbauer_product_formula, SeriesParams, Truncation,
};
use dihedral_bessel::special::{gegenbauer, pochhammer, power_neumann_check};

const K_GRID: [f64; 5] = [0.3, 0.5, 1.0, 2.0, 3.5];
const R_GRID: [f64; 4] = [0.1, 1.0, 5.0, 10.0];

fn xi_grid() -> Vec<f64> {
    (0..=6)
        .map(|i| std::f64::consts::PI * i as f64 / 6.0)
        .collect()
}

fn nine_point_x() -> Vec<f64> {
    (0..=8).map(|i| -1.0 + 0.25 * i as f64).collect()
}

fn trunc() -> Truncation {
    Truncation {
        tol: 1e-12,
        max_terms: 10_000,
    }
}

fn gegenbauer_scale(j: u32, k: f64) -> f64 {
    pochhammer(2.0 * k, j) / (1..=j).map(f64::from).product::<f64>()
}

#[test]
fn acceptance_01_closed_form_n2() {
    let mut worst = 0.0f64;
    for &k in &K_GRID {
        for &r in &R_GRID {
            for &xi in &xi_grid() {
                let p = SeriesParams::new(2, k, r, xi).unwrap();
                let direct = eval_direct(&p, trunc()).unwrap().value;
                let closed = eval_closed_n2(&p, trunc()).unwrap().value;
                let rel = (direct - closed).abs() / closed.abs();
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-10,
                    "k={k} R={r} xi={xi}: {direct} vs {closed} rel={rel:e}"
                );
            }
        }
    }
    println!("acceptance 01 closed_form_n2: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_02_exponential_n1() {
    let mut worst = 0.0f64;
    for &k in &K_GRID {
        for &r in &R_GRID {
            for &xi in &xi_grid() {
                let p = SeriesParams::new(1, k, r, xi).unwrap();
                let direct = eval_direct(&p, trunc()).unwrap().value;
                let closed = eval_closed_n1(&p).unwrap().value;
                let rel = (direct - closed).abs() / closed.abs();
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-11,
                    "k={k} R={r} xi={xi}: {direct} vs {closed} rel={rel:e}"
                );
            }
        }
    }
    println!("acceptance 02 exponential_n1: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_03_degree_identity() {
    let mut worst = 0.0f64;
    let mut worst_parity = 0.0f64;
    for n in 1..=5u32 {
        for &k in &K_GRID {
            for &xi in &xi_grid() {
                for degree in 0..=15u32 {
                    let lhs = gegenbauer_side(n, k, xi, degree).unwrap();
                    let rhs = composition_side(n, k, xi, degree).unwrap();
                    let diff = (lhs - rhs).abs();
                    let rel = diff / lhs.abs().max(1.0);
                    worst = worst.max(rel);
                    assert!(
                        diff <= 1e-12 * lhs.abs().max(1.0),
                        "n={n} k={k} xi={xi} N={degree}: {lhs} vs {rhs}"
                    );
                    if n % 2 == 0 && degree % 2 == 1 {
                        assert!(lhs.abs() <= 1e-13, "structural zero broke: {lhs}");
                        assert!(rhs.abs() <= 1e-13, "n={n} N={degree}: rhs={rhs}");
                        worst_parity = worst_parity.max(lhs.abs().max(rhs.abs()));
                    }
                }
            }
        }
    }
    println!(
        "acceptance 03 degree_identity: PASS (worst rel {worst:.3e}, parity {worst_parity:.3e})"
    );
}

#[test]
fn acceptance_04_elementary_symmetric_closed_forms() {
    let xi_11: Vec<f64> = (0..=10)
        .map(|i| std::f64::consts::PI * i as f64 / 10.0)
        .collect();
    let mut worst = 0.0f64;
    let mut worst_spread = 0.0f64;
    for n in 2..=8u32 {
        let mut ranges = vec![(f64::INFINITY, f64::NEG_INFINITY); n as usize];
        for &xi in &xi_11 {
            let angles = AngleSet::new(n, xi).unwrap();
            let e = elementary_symmetric(&angles.cosines);
            for m in 0..=n {
                let predicted = predicted_elementary(n, xi, m).unwrap();
                let diff = (e[m as usize] - predicted).abs();
                worst = worst.max(diff);
                assert!(
                    diff <= 1e-12,
                    "n={n} m={m} xi={xi}: {} vs {predicted}",
                    e[m as usize]
                );
                if m < n {
                    let slot = &mut ranges[m as usize];
                    slot.0 = slot.0.min(e[m as usize]);
                    slot.1 = slot.1.max(e[m as usize]);
                }
            }
        }
        for (m, (lo, hi)) in ranges.iter().enumerate() {
            let spread = hi - lo;
            worst_spread = worst_spread.max(spread);
            assert!(
                spread <= 1e-12,
                "e_{m} varies with xi for n={n}: spread {spread:e}"
            );
        }
    }
    println!(
        "acceptance 04 elementary_symmetric: PASS (worst diff {worst:.3e}, spread {worst_spread:.3e})"
    );
}

#[test]
fn acceptance_05_horn_route_normalization() {
    let mut worst = 0.0f64;
    for n in 1..=5u32 {
        for &k in &K_GRID {
            for &r in &R_GRID {
                for &xi in &xi_grid() {
                    let p = SeriesParams::new(n, k, r, xi).unwrap();
                    let direct = eval_direct(&p, trunc()).unwrap().value;
                    let horn = eval_horn_phi2(&p, trunc()).unwrap().value;
                    let rel = (horn - direct).abs() / direct.abs();
                    worst = worst.max(rel);
                    assert!(
                        rel <= 1e-9,
                        "n={n} k={k} R={r} xi={xi}: {horn} vs {direct} rel={rel:e}"
                    );
                }
            }
        }
    }
    println!("acceptance 05 horn_normalization: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_06_integral_form_n4() {
    let quad = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for &k in &K_GRID {
        for &r in &R_GRID {
            for &xi in &xi_grid() {
                let p = SeriesParams::new(4, k, r, xi).unwrap();
                let direct = eval_direct(&p, trunc()).unwrap().value;
                let integral = eval_integral_n4(&p, &quad, trunc()).unwrap().value;
                let rel = (integral - direct).abs() / direct.abs();
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-9,
                    "k={k} R={r} xi={xi}: {integral} vs {direct} rel={rel:e}"
                );
            }
        }
    }
    println!("acceptance 06 integral_n4: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_07_product_formula() {
    let quad = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for j in 0..=8u32 {
        for &k in &[0.3, 1.0, 2.5] {
            for &x in &nine_point_x() {
                let got = gegenbauer_product_formula(j, k, x, &quad).unwrap();
                let want = gegenbauer(j, k, 2.0 * x * x - 1.0).unwrap();
                let scale = got.abs().max(want.abs()).max(0.01 * gegenbauer_scale(j, k));
                let rel = (got - want).abs() / scale;
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-10,
                    "j={j} k={k} x={x}: {got} vs {want} rel={rel:e}"
                );
            }
        }
    }
    println!("acceptance 07 product_formula: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_08_moment_identity() {
    let quad = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for &k in &K_GRID {
        let norm = weight_normalization(k).unwrap();
        for m in 0..=10u32 {
            let got = norm * integrate_jacobi_weight(|z| z.powi(2 * m as i32), k, &quad).unwrap();
            let want = normalized_even_moment(k, m);
            let rel = (got - want).abs() / want.abs();
            worst = worst.max(rel);
            assert!(rel <= 1e-11, "k={k} m={m}: {got} vs {want} rel={rel:e}");
        }
    }
    println!("acceptance 08 moment_identity: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_09_triangular_inversion() {
    let mut worst = 0.0f64;
    for &q in &[1u32, 2, 3] {
        for &k in &[0.4, 1.0, 2.0] {
            for m in 0..=5u32 {
                for &xi in &xi_grid() {
                    let inv = triangular_inversion(q, k, xi, m).unwrap();
                    assert_eq!(
                        inv.leading().to_bits(),
                        1.0f64.to_bits(),
                        "a_M must be exactly 1"
                    );
                    let got = inv.reconstruct().unwrap();
                    let want = gegenbauer(m, k, xi.cos()).unwrap();
                    let rel = (got - want).abs() / want.abs().max(1.0);
                    worst = worst.max(rel);
                    assert!(
                        rel <= 1e-9,
                        "q={q} k={k} M={m} xi={xi}: {got} vs {want} rel={rel:e}"
                    );
                }
            }
        }
    }
    println!("acceptance 09 triangular_inversion: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_10_subset_product_representation() {
    let mut worst = 0.0f64;
    for j in 0..=8u32 {
        for k in 1..=3u32 {
            for &xi in &xi_grid() {
                let got = subset_product_representation(j, k, xi).unwrap();
                let want = gegenbauer(j, k as f64, xi.cos()).unwrap();
                let scale = got
                    .abs()
                    .max(want.abs())
                    .max(0.01 * gegenbauer_scale(j, k as f64));
                let rel = (got - want).abs() / scale;
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-10,
                    "j={j} k={k} xi={xi}: {got} vs {want} rel={rel:e}"
                );
            }
        }
    }
    println!("acceptance 10 subset_products: PASS (worst rel {worst:.3e})");
}

#[test]
fn acceptance_11_power_neumann() {
    let trunc = Truncation {
        tol: 1e-11,
        max_terms: 10_000,
    };
    for &nu in &[0.5, 1.0, 2.0, 3.5] {
        for &r in &[0.5, 1.0, 4.0] {
            assert!(power_neumann_check(nu, r, trunc).unwrap(), "nu={nu} R={r}");
        }
    }
    println!("acceptance 11 power_neumann: PASS (12 order/argument pairs at 1e-11)");
}

#[test]
fn acceptance_12_monomial_expansion() {
    for &k in &[0.4, 1.0, 2.5] {
        for m in 0..=8u32 {
            for &x in &nine_point_x() {
                assert!(
                    monomial_expansion_check(k, m, x).unwrap(),
                    "k={k} M={m} x={x}: expansion check failed at 1e-11"
                );
            }
        }
    }
    println!("acceptance 12 monomial_expansion: PASS (all points at 1e-11)");
}

#[test]
fn acceptance_13_cli_determinism() {
    let exe = env!("CARGO_BIN_EXE_dihedral-bessel");
    let configs: Vec<Vec<&str>> = vec![
        vec![
            "verify",
            "--suite",
            "degrees",
            "--n",
            "1..3",
            "--Nmax",
            "8",
            "--k",
            "0.5,1",
            "--xi",
            "0,pi/3,pi",
        ],
        vec!["verify", "--suite", "dimidiation", "--seed", "42"],
        vec![
            "verify",
            "--suite",
            "symmetric",
            "--n",
            "2..5",
            "--format",
            "json",
        ],
        vec![
            "eval",
            "--n",
            "2",
            "--k",
            "1",
            "--R",
            "1",
            "--xi",
            "pi/2",
            "--routes",
            "direct,closed_n2,horn_phi2",
        ],
    ];
    for args in &configs {
        let run = |args: &[&str]| {
            let out = Command::new(exe).args(args).output().expect("binary runs");
            assert!(
                out.status.success(),
                "exit {:?} for {args:?}: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            );
            out.stdout
        };
        let first = run(args);
        let second = run(args);
        assert_eq!(first, second, "outputs differ for {args:?}");
        assert!(!first.is_empty());
    }
    println!("acceptance 13 cli_determinism: PASS (byte-identical reruns)");
}

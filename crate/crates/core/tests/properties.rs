mod common;

use common::{grid_sup, oracle_d, spread};
use jacobi_gaps::bounds::{full_verification, Analysis};
use jacobi_gaps::discriminant::{eval_discriminant, hill_discriminant};
use jacobi_gaps::numerics::{
    eigenvalues_hermitian, eigenvalues_symmetric, eigenvalues_tridiagonal, HermitianMatrix,
    Polynomial, SymmetricMatrix,
};
use jacobi_gaps::quartic::{oracle_cross_check, quartic_band_structure, quartic_invariants};
use jacobi_gaps::spectrum::band_structure;
use jacobi_gaps::PeriodicJacobi;
use num_complex::Complex64;
use proptest::prelude::*;

fn jacobi(max_p: usize) -> impl Strategy<Value = PeriodicJacobi> {
    (1..=max_p).prop_flat_map(|p| {
        (
            prop::collection::vec(0.5..2.0f64, p),
            prop::collection::vec(-1.0..1.0f64, p),
        )
            .prop_map(|(a, b)| PeriodicJacobi::new(a, b).unwrap())
    })
}

fn symmetric(max_n: usize) -> impl Strategy<Value = SymmetricMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-3.0..3.0f64, n * n).prop_map(move |v| {
            let mut m = SymmetricMatrix::zeros(n);
            for i in 0..n {
                for j in 0..=i {
                    // add_symmetric doubles on the diagonal.
                    let x = if i == j {
                        v[i * n + j] / 2.0
                    } else {
                        v[i * n + j]
                    };
                    m.add_symmetric(i, j, x);
                }
            }
            m
        })
    })
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalize_is_idempotent_and_keeps_variation(j in jacobi(8)) {
        let n = j.normalize();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.normalize(), n.clone());
        let (v, w) = (j.variation(), n.variation());
        prop_assert!(close(v.omega_b, w.omega_b, 1e-14));
        prop_assert_eq!(v.omega_a, w.omega_a);
        prop_assert_eq!(v.omega_a, spread(j.a()));
        prop_assert_eq!(v.omega_b, spread(j.b()));
    }

    #[test]
    fn geometric_mean_below_arithmetic(j in jacobi(12)) {
        let v = j.variation();
        prop_assert!(v.geo_mean_a <= v.mean_a * (1.0 + 1e-14));
        prop_assert!(close(v.geo_mean_a.powi(j.period() as i32), j.a_product(), 1e-12));
    }

    #[test]
    fn symmetric_eigenvalues_match_trace_and_norm(m in symmetric(9)) {
        let ev = eigenvalues_symmetric(&m).unwrap();
        let f = m.frobenius_norm();
        prop_assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!((ev.iter().sum::<f64>() - m.trace()).abs() <= 1e-12 * (1.0 + f) * ev.len() as f64);
        let sq: f64 = ev.iter().map(|x| x * x).sum();
        prop_assert!((sq - f * f).abs() <= 1e-12 * (1.0 + f * f) * ev.len() as f64);
    }

    #[test]
    fn hermitian_solver_agrees_on_real_input(m in symmetric(7)) {
        let n = m.order();
        let data = (0..n * n).map(|k| Complex64::new(m.get(k / n, k % n), 0.0)).collect();
        let h = HermitianMatrix::from_rows(n, data).unwrap();
        let (x, y) = (eigenvalues_symmetric(&m).unwrap(), eigenvalues_hermitian(&h).unwrap());
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((a - b).abs() <= 1e-10 * (1.0 + m.frobenius_norm()));
        }
    }

    #[test]
    fn tridiagonal_matches_dense(
        diag in prop::collection::vec(-2.0..2.0f64, 2..10),
        seed in prop::collection::vec(0.1..2.0f64, 9),
    ) {
        let n = diag.len();
        let off = &seed[..n - 1];
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            m.add_symmetric(i, i, diag[i] / 2.0);
            if i + 1 < n {
                m.add_symmetric(i + 1, i, off[i]);
            }
        }
        let x = eigenvalues_tridiagonal(&diag, off).unwrap();
        let y = eigenvalues_symmetric(&m).unwrap();
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((a - b).abs() <= 1e-11);
        }
    }

    #[test]
    fn sup_norm_on_cubics_matches_fine_grid(
        c in prop::collection::vec(-5.0..5.0f64, 4),
        lo in -3.0..0.0f64,
        w in 0.1..4.0f64,
    ) {
        let p = Polynomial::new(c);
        let hi = lo + w;
        let s = p.sup_norm(lo, hi).unwrap();
        prop_assert!(s.norm >= p.eval(lo).abs() && s.norm >= p.eval(hi).abs());
        prop_assert!((p.eval(s.argmax).abs() - s.norm).abs() <= 1e-12 * (1.0 + s.norm));
        let g = grid_sup(|x| p.eval(x), lo, hi, 100_001);
        prop_assert!(s.norm >= g - 1e-12 * (1.0 + g));
        // Between grid points |P| can exceed the grid maximum by at most h·max|P'|.
        let d = p.derivative();
        let slope = grid_sup(|x| d.eval(x), lo, hi, 1001) + 1.0;
        prop_assert!(s.norm <= g + slope * w / 100_000.0);
    }

    #[test]
    fn polynomial_product_is_pointwise(
        a in prop::collection::vec(-3.0..3.0f64, 1..6),
        b in prop::collection::vec(-3.0..3.0f64, 1..6),
        x in -2.0..2.0f64,
    ) {
        let (p, q) = (Polynomial::new(a), Polynomial::new(b));
        let r = &p * &q;
        prop_assert!(close(r.eval(x), p.eval(x) * q.eval(x), 1e-11));
        if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
            prop_assert_eq!(r.degree(), Some(dp + dq));
        }
        prop_assert!(close((&p + &q).eval(x), p.eval(x) + q.eval(x), 1e-12));
        prop_assert!(close((&p - &q).eval(x), p.eval(x) - q.eval(x), 1e-12));
    }

    #[test]
    fn discriminant_matches_monodromy(j in jacobi(10), t in -1.0..1.0f64) {
        let x = t * j.norm_bound();
        let d = hill_discriminant(&j).unwrap();
        let o = oracle_d(&j, x);
        prop_assert!(close(d.eval(x), o, 1e-9));
        prop_assert!(close(eval_discriminant(&j, x), o, 1e-12));
    }

    #[test]
    fn discriminant_is_independent_of_origin(j in jacobi(8), m in -20i64..20) {
        let d = hill_discriminant(&j).unwrap();
        let e = hill_discriminant(&j.shift_origin(m)).unwrap();
        prop_assert!(d.relative_distance(&e) <= 1e-10);
    }

    #[test]
    fn spectrum_matches_monodromy_oracle(j in jacobi(10)) {
        let bs = band_structure(&j).unwrap();
        for e in &bs.edges {
            prop_assert!((oracle_d(&j, *e).abs() - 2.0).abs() <= 1e-8);
        }
        for b in &bs.bands {
            for k in 1..8 {
                let x = b.lo + (b.hi - b.lo) * k as f64 / 8.0;
                prop_assert!(oracle_d(&j, x).abs() <= 2.0 + 1e-8);
            }
        }
        for g in bs.gaps.iter().filter(|g| !g.closed) {
            prop_assert!(oracle_d(&j, g.location).abs() > 2.0);
        }
    }

    #[test]
    fn spectrum_is_shift_invariant_and_translation_covariant(
        j in jacobi(8), m in -10i64..10, c in -3.0..3.0f64,
    ) {
        let bs = band_structure(&j).unwrap();
        let shifted = band_structure(&j.shift_origin(m)).unwrap();
        let b: Vec<f64> = j.b().iter().map(|x| x + c).collect();
        let moved = band_structure(&PeriodicJacobi::new(j.a().to_vec(), b).unwrap()).unwrap();
        for k in 0..bs.edges.len() {
            prop_assert!((bs.edges[k] - shifted.edges[k]).abs() <= 1e-10);
            prop_assert!((bs.edges[k] + c - moved.edges[k]).abs() <= 1e-10);
        }
    }

    #[test]
    fn theorem_ratios_are_scale_invariant(j in jacobi(8), t in 0.2..5.0f64) {
        let x = full_verification(&j).unwrap();
        let y = full_verification(&j.scaled(t).unwrap()).unwrap();
        prop_assert!(x.passed() && y.passed());
        for name in ["omega_b_upper", "omega_a_upper", "max_gap_lower"] {
            let (rx, ry) = (x.report.get(name).unwrap(), y.report.get(name).unwrap());
            prop_assert!((rx.lhs * t - ry.lhs).abs() <= 1e-9 * (1.0 + ry.lhs));
            if let (Some(a), Some(b)) = (rx.ratio, ry.ratio) {
                if rx.rhs > 1e-6 {
                    prop_assert!((a - b).abs() <= 1e-6 * (1.0 + a), "{name}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn m_is_at_least_one(j in jacobi(10)) {
        let a = Analysis::new(&j).unwrap();
        prop_assert!(a.disc.m >= 1.0 - 1e-9);
        prop_assert!(a.edge_level_deviation <= 1e-8);
    }

    #[test]
    fn quartic_spectrum_is_symmetric_and_shift_invariant(
        a in prop::collection::vec(0.5..2.0f64, 4),
    ) {
        let inv = quartic_invariants(a[0], a[1], a[2], a[3]).unwrap();
        let e = inv.edges();
        for k in 0..8 {
            prop_assert!((e[k] + e[7 - k]).abs() <= 1e-14);
        }
        prop_assert!(e.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(quartic_band_structure(&inv).is_ok());
        for (x, y, z, w) in [
            (a[1], a[2], a[3], a[0]),
            (a[3], a[2], a[1], a[0]),
        ] {
            prop_assert!(oracle_cross_check(x, y, z, w).is_ok());
            let other = quartic_invariants(x, y, z, w).unwrap().edges();
            for k in 0..8 {
                prop_assert!((e[k] - other[k]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn quartic_gap_closure_criteria(x in 0.5..2.0f64, y in 0.5..2.0f64, z in 0.5..2.0f64) {
        // a1 = a3, a2 = a4 closes the exterior gaps.
        let ext = quartic_invariants(x, y, x, y).unwrap();
        prop_assert!(ext.gamma_ext() <= 1e-10);
        prop_assert!(ext.gamma_int() > 0.0 || (x - y).abs() < 1e-12);
        // a1 a3 = a2 a4 closes the interior gap.
        let w = x * z / y;
        prop_assume!((0.1..10.0).contains(&w));
        let int = quartic_invariants(x, y, z, w).unwrap();
        prop_assert!(int.gamma_int() <= 1e-10);
        prop_assert!(oracle_cross_check(x, y, z, w).is_ok());
    }
}

//! The extremal bound `Σ x_j² ≤ 2n (‖P‖/2)^{2/n}` for balanced real-rooted
//! polynomials. Chebyshev polynomials attain equality.
//!
//! ```text
//! cargo run --example extremal_polynomials
//! ```

use std::f64::consts::PI;

use jacobi_gaps::bounds::{kk_bound, BalancedPolynomial};

fn main() -> jacobi_gaps::Result<()> {
    println!("{:<28} {:>10} {:>10} {:>8}", "roots", "lhs", "rhs", "ratio");
    let mut cases: Vec<(String, Vec<f64>)> = Vec::new();
    for n in 2..=6 {
        // Zeros of T_n on [-1, 1].
        let roots = (0..n)
            .map(|k| ((2 * k + 1) as f64 * PI / (2 * n) as f64).cos())
            .collect();
        cases.push((format!("Chebyshev T_{n}"), roots));
    }
    cases.push((
        "equally spaced, n = 5".into(),
        vec![-2.0, -1.0, 0.0, 1.0, 2.0],
    ));
    cases.push(("clustered, n = 4".into(), vec![-1.5, -1.4, 1.4, 1.5]));
    cases.push(("lopsided, n = 3".into(), vec![-2.0, 0.5, 1.5]));

    for (name, roots) in cases {
        let x = BalancedPolynomial::new(roots)?;
        let kk = kk_bound(&x)?;
        println!(
            "{name:<28} {:>10.6} {:>10.6} {:>8.5}",
            kk.lhs,
            kk.rhs,
            kk.lhs / kk.rhs
        );
    }
    Ok(())
}

//! Closed-form spectrum of a 4-periodic matrix with zero diagonal, checked
//! against the general eigenvalue pipeline.
//!
//! ```text
//! cargo run --example quartic_oracle -- 0.7 1.4 1.1 0.9
//! ```

use jacobi_gaps::quartic::{
    oracle_cross_check, quartic_band_structure, quartic_inequalities, quartic_invariants,
};

fn main() -> jacobi_gaps::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let a = if args.len() == 4 {
        args
    } else {
        vec![0.7, 1.4, 1.1, 0.9]
    };

    let inv = quartic_invariants(a[0], a[1], a[2], a[3])?;
    println!(
        "alpha = {:.6}, beta = {:.6}, a^4 = {:.6}",
        inv.alpha, inv.beta, inv.a4th
    );
    println!("D+ = {:.6}, D- = {:.6}", inv.d_plus, inv.d_minus);
    let bs = quartic_band_structure(&inv)?;
    for b in &bs.bands {
        println!("band [{:+.6}, {:+.6}]", b.lo, b.hi);
    }
    println!(
        "|gamma_int| = {:.6}, |gamma_ext| = {:.6}",
        inv.gamma_int(),
        inv.gamma_ext()
    );

    let q = quartic_inequalities(&inv)?;
    if q.relabeled {
        println!("(labels rotated by two)");
    }
    for r in &q.report.records {
        println!(
            "  {:<15} {:.6} <= {:.6}  {}",
            r.name, r.lhs, r.rhs, r.status
        );
    }
    println!(
        "closed form vs general pipeline: {:.1e}",
        oracle_cross_check(a[0], a[1], a[2], a[3])?
    );
    Ok(())
}

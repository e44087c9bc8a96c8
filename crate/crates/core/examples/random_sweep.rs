//! A seeded random sweep: how close do random matrices come to the bounds?
//!
//! ```text
//! cargo run --release --example random_sweep -- 500 42
//! ```

use jacobi_gaps::cli::sweep::{run_sweep, SweepSummary};
use jacobi_gaps::cli::SweepConfig;

fn main() -> jacobi_gaps::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let cfg = SweepConfig {
        seed,
        count,
        p_min: 2,
        p_max: 12,
        a_lo: 0.5,
        a_hi: 2.0,
        b_lo: -1.0,
        b_hi: 1.0,
        epsilon: None,
    };
    let rows = run_sweep(&cfg)?;
    let s = SweepSummary::of(&rows);
    println!("{} samples, {} failures", s.count, s.failures);
    println!(
        "max omega_b / (p(p-1)/2 |gamma|) = {:.6}",
        s.max_ratio_b_upper
    );
    println!(
        "max omega_a / (p^2 sqrt(p) |gamma|) = {:.6}",
        s.max_ratio_a_upper
    );
    println!(
        "max (|gamma|/4) / (omega_a + omega_b) = {:.6}",
        s.max_ratio_lower
    );

    let mut by_p = vec![(0usize, 0.0f64); 13];
    for r in &rows {
        let e = &mut by_p[r.p];
        e.0 += 1;
        e.1 = e.1.max(r.ratio_b_upper.unwrap_or(0.0));
    }
    for (p, (n, worst)) in by_p.iter().enumerate().filter(|(_, (n, _))| *n > 0) {
        println!("  p = {p:>2}: {n:>4} samples, max omega_b ratio {worst:.4}");
    }
    Ok(())
}

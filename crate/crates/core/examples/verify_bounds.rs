//! Run every inequality check on one matrix and print the report.
//!
//! ```text
//! cargo run --example verify_bounds
//! ```

use jacobi_gaps::bounds::{full_verification, Status};
use jacobi_gaps::PeriodicJacobi;

fn main() -> jacobi_gaps::Result<()> {
    for (a, b) in [
        (vec![1.0, 1.0], vec![1.0, -1.0]),
        (vec![0.7, 1.6, 1.1, 0.9], vec![0.3, -0.2, 0.8, -0.6]),
        (vec![1.0; 5], vec![0.0; 5]),
    ] {
        let j = PeriodicJacobi::new(a, b)?;
        let v = full_verification(&j)?;
        let a = &v.analysis;
        println!(
            "p = {}: |gamma| = {:.6}, omega_a = {:.6}, omega_b = {:.6}, M = {:.6}",
            j.period(),
            a.bands.max_gap,
            a.variation.omega_a,
            a.variation.omega_b,
            a.disc.m
        );
        for r in &v.report.records {
            match &r.status {
                Status::Skipped(why) => println!("  {:<26} skipped ({why})", r.name),
                s => println!("  {:<26} {:>12.6} <= {:<12.6} {s}", r.name, r.lhs, r.rhs),
            }
        }
        println!("  all hold: {}\n", v.passed());
    }
    Ok(())
}

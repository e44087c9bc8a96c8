//! Small perturbations of a constant matrix open only small gaps, and
//! matrices with small gaps are close to constant.
//!
//! ```text
//! cargo run --example perturbation_stability
//! ```

use jacobi_gaps::bounds::perturbation_gap_bound;
use jacobi_gaps::cli::sweep::sample_matrices;
use jacobi_gaps::cli::SweepConfig;
use jacobi_gaps::spectrum::band_structure;

fn main() -> jacobi_gaps::Result<()> {
    println!(
        "{:>8} {:>12} {:>14} {:>12}",
        "eps", "max gap", "2(wb + 2wa)", "gap/bound"
    );
    for eps in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5] {
        let cfg = SweepConfig {
            seed: 1,
            count: 100,
            p_min: 2,
            p_max: 10,
            a_lo: 0.5,
            a_hi: 2.0,
            b_lo: -1.0,
            b_hi: 1.0,
            epsilon: Some(eps),
        };
        let (mut gap, mut bound, mut ratio) = (0.0f64, 0.0f64, 0.0f64);
        for j in sample_matrices(&cfg)? {
            let g = band_structure(&j)?.max_gap;
            let b = 2.0 * perturbation_gap_bound(&j)?.norm_bound;
            gap = gap.max(g);
            bound = bound.max(b);
            ratio = ratio.max(g / b);
        }
        println!("{eps:>8.0e} {gap:>12.4e} {bound:>14.4e} {ratio:>12.4}");
    }
    Ok(())
}

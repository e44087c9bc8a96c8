//! Bands, gaps and band edges of a periodic Jacobi matrix.
//!
//! ```text
//! cargo run --example spectrum_bands
//! ```

use jacobi_gaps::spectrum::{band_edges, band_structure, EdgeClass};
use jacobi_gaps::PeriodicJacobi;

fn main() -> jacobi_gaps::Result<()> {
    let j = PeriodicJacobi::new(
        vec![0.8, 1.3, 0.6, 1.9, 1.1],
        vec![0.4, -0.7, 0.2, 0.9, -0.3],
    )?;
    let bs = band_structure(&j)?;

    println!("period {}", j.period());
    for e in band_edges(&j)? {
        let class = match e.class {
            EdgeClass::Plus => "D = +2",
            EdgeClass::Minus => "D = -2",
        };
        println!(
            "edge {:>10.6}  {class}  (D = {:+.12})",
            e.value, e.disc_value
        );
    }
    for (k, b) in bs.bands.iter().enumerate() {
        println!("band {k}: [{:.6}, {:.6}]", b.lo, b.hi);
    }
    for g in &bs.gaps {
        println!(
            "gap {}: ({:.6}, {:.6}) length {:.6}",
            g.index, g.lower, g.upper, g.length
        );
    }
    println!(
        "hull [{:.6}, {:.6}], |L| = {:.6}",
        bs.hull.0, bs.hull.1, bs.hull_length
    );
    println!("largest gap {:.6} (gap {:?})", bs.max_gap, bs.max_gap_index);

    // A constant matrix has one band [b0 - 2a0, b0 + 2a0] whatever period it is given.
    let c = band_structure(&PeriodicJacobi::constant(1.5, -0.5, 6)?)?;
    println!(
        "constant: hull [{:.6}, {:.6}], largest gap {:.1e}",
        c.hull.0, c.hull.1, c.max_gap
    );
    Ok(())
}

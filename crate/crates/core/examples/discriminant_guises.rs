//! The Hill discriminant computed three ways: by the three-term recurrence,
//! by interpolating pointwise values, and from the Floquet matrix.
//!
//! ```text
//! cargo run --example discriminant_guises
//! ```

use jacobi_gaps::discriminant::{
    cross_check, discriminant_roots, eval_discriminant, floquet_matrix, hill_discriminant,
    special_solutions, trace_identity,
};
use jacobi_gaps::spectrum::{dirichlet_spectrum, trace_formula_b};
use jacobi_gaps::PeriodicJacobi;

fn main() -> jacobi_gaps::Result<()> {
    let j = PeriodicJacobi::new(vec![1.0, 2.0, 3.0], vec![0.5, -1.0, 0.25])?;

    let d = hill_discriminant(&j)?;
    println!("D coefficients (lowest first): {:?}", d.coeffs());
    println!(
        "D(0.7) = {:.12} (scalar recurrence {:.12})",
        d.eval(0.7),
        eval_discriminant(&j, 0.7)
    );

    let sol = special_solutions(&j, 1);
    println!("s_4 = {:?}", sol.s(4).coeffs());
    println!("c_3 = {:?}", sol.c(3).coeffs());

    let phi = floquet_matrix(&j, 1)?;
    println!("Floquet matrix, base index {}:", phi.base_index);
    for i in 0..3 {
        let row: Vec<String> = (0..3)
            .map(|k| format!("{:>12}", format!("{}", phi.matrix.get(i, k))))
            .collect();
        println!("  {}", row.join(" "));
    }

    let cc = cross_check(&j, -6.0, 6.0)?;
    println!(
        "recurrence vs interpolation {:.1e}",
        cc.recurrence_vs_interpolation
    );
    println!(
        "recurrence vs Floquet       {:.1e}",
        cc.recurrence_vs_floquet
    );
    println!(
        "interpolation vs Floquet    {:.1e}",
        cc.interpolation_vs_floquet
    );

    println!("zeros of D: {:?}", discriminant_roots(&j)?);
    println!(
        "trace identity residual: {:.1e}",
        trace_identity(&j)?.unwrap_or(0.0)
    );
    for m in 0..3 {
        let ds = dirichlet_spectrum(&j, m)?;
        let r = trace_formula_b(&j, m)?.unwrap_or(0.0);
        println!(
            "Dirichlet spectrum m = {m}: {:?}  (trace formula residual {r:.1e})",
            ds.xi
        );
    }
    Ok(())
}

//! Closed-form spectra of 4-periodic Jacobi matrices with zero diagonal.
//!
//! With `b ≡ 0` the discriminant is `D(λ) = (λ⁴ − αλ² + β) / a⁴` where
//! `α = Σ a_j²`, `β = (a_1a_3)² + (a_2a_4)²` and `a⁴ = a_1a_2a_3a_4`, so both
//! equations `D = ±2` are biquadratic. The spectrum is
//! `±[λ1⁻, λ2⁻] ∪ ±[λ2⁺, λ1⁺]` with an interior gap `(−λ1⁻, λ1⁻)` and two
//! exterior gaps `±(λ2⁻, λ2⁺)`.
//!
//! The roots are evaluated in cancellation-free form, using
//! `α² − D⁺ = 4(a_1a_3 − a_2a_4)²`, `α² − D⁻ = 4(a_1a_3 + a_2a_4)²`
//! and the factorizations
//! `D⁺ = [(a_1−a_3)² + (a_2+a_4)²]·[(a_1+a_3)² + (a_2−a_4)²]`,
//! `D⁻ = [(a_1−a_3)² + (a_2−a_4)²]·[(a_1+a_3)² + (a_2+a_4)²]`.

use std::f64::consts::SQRT_2;

use crate::bounds::{BoundsReport, CheckRecord, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::model::{oscillation, PeriodicJacobi};
use crate::spectrum::{band_structure, BandStructure};

/// Values of `D^±` in `[−1e-12·α², 0)` are rounding noise and clamp to zero.
const CLAMP_REL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticInvariants {
    pub a: [f64; 4],
    pub alpha: f64,
    pub beta: f64,
    /// `a_1 a_2 a_3 a_4`.
    pub a4th: f64,
    /// `α² − 4(β − 2a⁴)`, clamped at zero.
    pub d_plus: f64,
    /// `α² − 4(β + 2a⁴)`, clamped at zero.
    pub d_minus: f64,
    /// `D⁺` from the product factorization.
    pub d_plus_factored: f64,
    /// `D⁻` from the product factorization.
    pub d_minus_factored: f64,
    pub lambda1_minus: f64,
    pub lambda1_plus: f64,
    pub lambda2_minus: f64,
    pub lambda2_plus: f64,
}

fn clamp(v: f64, alpha: f64, which: &'static str) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else if v >= -CLAMP_REL * alpha * alpha {
        Ok(0.0)
    } else {
        Err(Error::Consistency {
            check: which,
            deviation: -v,
            tolerance: CLAMP_REL * alpha * alpha,
        })
    }
}

/// α, β, a⁴, D^± and the four nonnegative `±2`-points.
pub fn quartic_invariants(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<QuarticInvariants> {
    for (index, v) in [a1, a2, a3, a4].into_iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::NonFinite {
                field: "a",
                index,
                value: v,
            });
        }
        if v <= 0.0 {
            return Err(Error::NonPositive { index, value: v });
        }
    }
    let alpha = a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4;
    let (p13, p24) = (a1 * a3, a2 * a4);
    let beta = p13 * p13 + p24 * p24;
    let a4th = a1 * a2 * a3 * a4;
    let d_plus = clamp(alpha * alpha - 4.0 * (beta - 2.0 * a4th), alpha, "D+ >= 0")?;
    let d_minus = clamp(alpha * alpha - 4.0 * (beta + 2.0 * a4th), alpha, "D- >= 0")?;
    let d_plus_factored =
        ((a1 - a3).powi(2) + (a2 + a4).powi(2)) * ((a1 + a3).powi(2) + (a2 - a4).powi(2));
    let d_minus_factored =
        ((a1 - a3).powi(2) + (a2 - a4).powi(2)) * ((a1 + a3).powi(2) + (a2 + a4).powi(2));

    let scale = alpha * alpha;
    let checks = [
        ("D+ - D- = 16 a^4", (d_plus - d_minus - 16.0 * a4th).abs()),
        ("D+ factorization", (d_plus - d_plus_factored).abs()),
        ("D- factorization", (d_minus - d_minus_factored).abs()),
    ];
    for (check, dev) in checks {
        if dev > 1e-10 * scale {
            return Err(Error::Consistency {
                check,
                deviation: dev / scale,
                tolerance: 1e-10,
            });
        }
    }

    let sp = d_plus_factored.sqrt();
    let sm = d_minus_factored.sqrt();
    Ok(QuarticInvariants {
        a: [a1, a2, a3, a4],
        alpha,
        beta,
        a4th,
        d_plus,
        d_minus,
        d_plus_factored,
        d_minus_factored,
        lambda1_minus: SQRT_2 * (p13 - p24).abs() / (alpha + sp).sqrt(),
        lambda1_plus: ((alpha + sp) / 2.0).sqrt(),
        lambda2_minus: SQRT_2 * (p13 + p24) / (alpha + sm).sqrt(),
        lambda2_plus: ((alpha + sm) / 2.0).sqrt(),
    })
}

impl QuarticInvariants {
    /// `|γ_int| = 2λ1⁻`.
    pub fn gamma_int(&self) -> f64 {
        2.0 * self.lambda1_minus
    }

    /// `|γ_ext| = λ2⁺ − λ2⁻`, evaluated as `√(2D⁻) / (√(α+√D⁻) + √(α−√D⁻))`.
    pub fn gamma_ext(&self) -> f64 {
        let sm = self.d_minus_factored.sqrt();
        SQRT_2 * sm / ((self.alpha + sm).sqrt() + SQRT_2 * self.lambda2_minus)
    }

    /// `|γ| = max(|γ_int|, |γ_ext|)`.
    pub fn max_gap(&self) -> f64 {
        self.gamma_int().max(self.gamma_ext())
    }

    /// The eight band edges in increasing order.
    pub fn edges(&self) -> [f64; 8] {
        let (l1m, l1p, l2m, l2p) = (
            self.lambda1_minus,
            self.lambda1_plus,
            self.lambda2_minus,
            self.lambda2_plus,
        );
        [-l1p, -l2p, -l2m, -l1m, l1m, l2m, l2p, l1p]
    }

    pub fn omega_a(&self) -> f64 {
        oscillation(&self.a)
    }
}

/// Bands `±[λ1⁻, λ2⁻]`, `±[λ2⁺, λ1⁺]` as a [`BandStructure`].
pub fn quartic_band_structure(inv: &QuarticInvariants) -> Result<BandStructure> {
    BandStructure::from_sorted_edges(inv.edges().to_vec())
}

#[derive(Debug, Clone)]
pub struct QuarticReport {
    /// True when the labels were rotated by two so that `a_1 + a_2 ≥ a_3 + a_4`.
    pub relabeled: bool,
    pub report: BoundsReport,
}

/// The oscillation inequalities for 4-periodic matrices, both directions.
pub fn quartic_inequalities(inv: &QuarticInvariants) -> Result<QuarticReport> {
    quartic_inequalities_with(inv, DEFAULT_TOL)
}

pub fn quartic_inequalities_with(inv: &QuarticInvariants, tol: f64) -> Result<QuarticReport> {
    let [b1, b2, b3, b4] = inv.a;
    let relabeled = b1 + b2 < b3 + b4;
    // Rotating by two leaves α, β, a⁴ and hence the spectrum unchanged.
    let [a1, a2, a3, a4] = if relabeled { [b3, b4, b1, b2] } else { inv.a };
    let gi = inv.gamma_int();
    let ge = inv.gamma_ext();
    let g = gi.max(ge);
    let omega = inv.omega_a();
    let ra = inv.alpha.sqrt();
    let s = a1 + a2 + a3 + a4;
    let chk = |name: &str, lhs: f64, rhs: f64| CheckRecord::check(name, lhs, rhs, tol);
    let records = vec![
        chk("d_plus_below_alpha", inv.d_plus_factored.sqrt(), inv.alpha),
        chk(
            "d_minus_below_alpha",
            inv.d_minus_factored.sqrt(),
            inv.alpha,
        ),
        chk(
            "opposite_a_vs_ext_gap",
            (a1 - a3).abs().max((a2 - a4).abs()),
            2.0 * ge,
        ),
        chk("interior_lower", (a1 * a3 - a2 * a4).abs() / ra, 0.5 * gi),
        chk("sum_ratio_lower", 0.5, s / (2.0 * ra)),
        chk("sum_ratio_half", s / (2.0 * ra), (a1 + a2) / ra),
        chk("sum_ratio_pair", (a1 + a2) / ra, s / ra),
        chk("sum_ratio_upper", s / ra, 2.0),
        chk("a12_gap", (a1 - a2).abs(), gi + 8.0 * ge),
        chk("a12_max", (a1 - a2).abs(), 9.0 * g),
        chk("a34_gap", (a3 - a4).abs(), gi + 12.0 * ge),
        chk("omega_a_mixed_gaps", omega, gi + 12.0 * ge),
        chk("omega_a_max_gap", omega, 13.0 * g),
        chk("reverse_int", gi, 4.0 * SQRT_2 * omega),
        chk("reverse_ext", ge, 2.0 * omega),
    ];
    Ok(QuarticReport {
        relabeled,
        report: BoundsReport { records },
    })
}

/// Max absolute deviation between the closed-form edges and the general
/// eigenvalue pipeline on `J = (a, b = 0)`; fails above `1e-9 · (1 + λ1⁺)`.
pub fn oracle_cross_check(a1: f64, a2: f64, a3: f64, a4: f64) -> Result<f64> {
    let inv = quartic_invariants(a1, a2, a3, a4)?;
    let j = PeriodicJacobi::new(vec![a1, a2, a3, a4], vec![0.0; 4])?;
    let general = band_structure(&j)?;
    let dev = inv
        .edges()
        .iter()
        .zip(&general.edges)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let tol = 1e-9 * (1.0 + inv.lambda1_plus);
    if dev > tol {
        return Err(Error::Consistency {
            check: "closed-form vs general band edges",
            deviation: dev,
            tolerance: tol,
        });
    }
    Ok(dev)
}

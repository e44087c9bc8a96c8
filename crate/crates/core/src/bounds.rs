//! Numerical verification of the gap/oscillation inequalities.
//!
//! Every inequality is expressed as `lhs ≤ rhs` and recorded in a
//! [`CheckRecord`]. A record holds when `lhs ≤ rhs + tol · (1 + |lhs| + |rhs|)`
//! with `tol = 1e-9` by default (`1e-12` in strict mode). When `rhs` is exactly
//! zero and the record holds, the ratio `lhs / rhs` is meaningless and the
//! record is flagged [`Status::Degenerate`] instead of passing through a NaN.
//!
//! All checks run on the normalized matrix (`Σ b_j = 0`); the shift leaves
//! both oscillations and every gap length unchanged.

use std::fmt;

use crate::discriminant::{trace_identity_residual, DiscriminantReport};
use crate::error::{Error, Result};
use crate::model::{PeriodicJacobi, VariationReport};
use crate::numerics::Polynomial;
use crate::spectrum::{
    band_edges, dirichlet_gap_violation, dirichlet_spectrum, trace_formula_b, BandStructure,
};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const STRICT_TOL: f64 = 1e-12;

/// `M` within this distance of 1 counts as the all-gaps-closed case.
pub const M_ONE_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum Status {
    Pass,
    Fail,
    /// Holds, but with `rhs = 0` so the ratio is undefined.
    Degenerate,
    /// Not applicable on this input; the string names the branch.
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("PASS"),
            Status::Fail => f.write_str("FAIL"),
            Status::Degenerate => f.write_str("DEGENERATE"),
            Status::Skipped(why) => write!(f, "SKIPPED({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub slack: f64,
    /// `lhs / rhs`; `Some(0.0)` for `0 ≤ 0`, `None` when `rhs = 0 < |lhs|`.
    pub ratio: Option<f64>,
    pub status: Status,
}

impl CheckRecord {
    pub fn check(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let holds = lhs <= rhs + tol * (1.0 + lhs.abs() + rhs.abs());
        let ratio = if rhs != 0.0 {
            Some(lhs / rhs)
        } else if lhs == 0.0 {
            Some(0.0)
        } else {
            None
        };
        let status = match (holds, rhs == 0.0) {
            (false, _) => Status::Fail,
            (true, true) => Status::Degenerate,
            (true, false) => Status::Pass,
        };
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack: rhs - lhs,
            ratio,
            status,
        }
    }

    pub fn skipped(name: impl Into<String>, branch: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            ratio: None,
            status: Status::Skipped(branch.into()),
        }
    }

    /// True unless the record failed.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundsReport {
    pub records: Vec<CheckRecord>,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(CheckRecord::ok)
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.ok())
    }

    fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    fn extend(&mut self, other: BoundsReport) {
        self.records.extend(other.records);
    }
}

/// Roots of a monic real-rooted polynomial whose roots sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct BalancedPolynomial {
    roots: Vec<f64>,
    pub sum: f64,
    pub sum_of_squares: f64,
    /// Coefficient of `x^{n−2}`, equal to `−½ Σ x_j²`.
    pub sigma2: f64,
    /// `‖P‖` over `[x_1, x_n]`.
    pub sup_norm: f64,
}

impl BalancedPolynomial {
    /// Sorts the roots and rejects `|Σ x_j| > 1e-10 · n · max|x_j|`.
    pub fn new(mut roots: Vec<f64>) -> Result<Self> {
        if roots.is_empty() || roots.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(
                "balanced polynomial needs finite roots".into(),
            ));
        }
        roots.sort_by(f64::total_cmp);
        let n = roots.len() as f64;
        let sum: f64 = roots.iter().sum();
        let max = roots.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        if sum.abs() > 1e-10 * n * max {
            return Err(Error::InvalidArgument(format!(
                "roots are not balanced: sum = {sum:e}"
            )));
        }
        let sum_of_squares: f64 = roots.iter().map(|x| x * x).sum();
        let (lo, hi) = (roots[0], roots[roots.len() - 1]);
        let sup_norm = Polynomial::from_roots(&roots).sup_norm(lo, hi)?.norm;
        Ok(Self {
            sum,
            sum_of_squares,
            sigma2: -0.5 * sum_of_squares,
            sup_norm,
            roots,
        })
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }
}

/// Both sides of `Σ x_j² ≤ 2n (‖P‖ / 2)^{2/n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KkBound {
    pub lhs: f64,
    pub rhs: f64,
}

pub fn kk_bound(x: &BalancedPolynomial) -> Result<KkBound> {
    let n = x.degree();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the extremal bound needs at least two roots".into(),
        ));
    }
    let nf = n as f64;
    Ok(KkBound {
        lhs: x.sum_of_squares,
        rhs: 2.0 * nf * (0.5 * x.sup_norm).powf(2.0 / nf),
    })
}

/// Comparator data for the perturbation bound `|γ_j| ≤ 2(ω_b + 2ω_a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationReport {
    /// Constant off-diagonal of the comparator (midpoint of the range of `a`).
    pub alpha: f64,
    /// Constant diagonal of the comparator (midpoint of the range of `b`).
    pub beta: f64,
    pub sup_b_dev: f64,
    pub sup_a_dev: f64,
    /// `ω_b + 2ω_a`.
    pub norm_bound: f64,
    /// `sup|b_j − β| + 2 sup|a_j − α|` for the midpoint comparator.
    pub midpoint_bound: f64,
    /// One record per gap: `|γ_j| ≤ 2 · norm_bound`.
    pub gap_checks: Vec<CheckRecord>,
}

/// Everything the checks need, computed once on the normalized matrix.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub input: PeriodicJacobi,
    pub normalized: PeriodicJacobi,
    /// Diagonal mean removed by normalization (zero when none was needed).
    pub diagonal_shift: f64,
    pub variation: VariationReport,
    pub bands: BandStructure,
    pub disc: DiscriminantReport,
    /// `max ||D(edge)| − 2|` over all band edges.
    pub edge_level_deviation: f64,
    pub tol: f64,
}

impl Analysis {
    pub fn new(j: &PeriodicJacobi) -> Result<Self> {
        Self::with_tolerance(j, DEFAULT_TOL)
    }

    pub fn with_tolerance(j: &PeriodicJacobi, tol: f64) -> Result<Self> {
        let normalized = j.normalize();
        let diagonal_shift = if normalized == *j {
            0.0
        } else {
            j.diagonal_mean()
        };
        let edges = band_edges(&normalized)?;
        let edge_level_deviation = edges
            .iter()
            .map(|e| (e.disc_value.abs() - 2.0).abs())
            .fold(0.0, f64::max);
        let bands = BandStructure::from_sorted_edges(edges.iter().map(|e| e.value).collect())?;
        let disc = DiscriminantReport::compute(&normalized, bands.hull, &bands.gap_intervals())?;
        Ok(Self {
            input: j.clone(),
            variation: normalized.variation(),
            normalized,
            diagonal_shift,
            bands,
            disc,
            edge_level_deviation,
            tol,
        })
    }

    pub fn period(&self) -> usize {
        self.normalized.period()
    }

    fn pf(&self) -> f64 {
        self.period() as f64
    }

    fn check(&self, name: &str, lhs: f64, rhs: f64) -> CheckRecord {
        CheckRecord::check(name, lhs, rhs, self.tol)
    }

    /// `ω_b ≤ p(p−1)/2 · |γ|`, `ω_a ≤ p²√p · |γ|` and `|γ|/4 ≤ ω_a + ω_b`.
    pub fn theorem_bounds(&self) -> BoundsReport {
        let p = self.pf();
        let g = self.bands.max_gap;
        let v = &self.variation;
        BoundsReport {
            records: vec![
                self.check("omega_b_upper", v.omega_b, p * (p - 1.0) / 2.0 * g),
                self.check("omega_a_upper", v.omega_a, p * p * p.sqrt() * g),
                self.check("max_gap_lower", g / 4.0, v.omega_a + v.omega_b),
            ],
        }
    }

    /// The extremal bound on the roots of `a^p·D`, its chaining to `M`, and
    /// the resulting `(1/p) Σ a_j² ≤ a² M^{2/p}`.
    pub fn discriminant_kk(&self) -> Result<BoundsReport> {
        let names = [
            "extremal_discriminant_roots",
            "extremal_norm_chain",
            "extremal_mean_square_a",
        ];
        if self.period() < 2 {
            return Ok(BoundsReport {
                records: names
                    .iter()
                    .map(|n| CheckRecord::skipped(*n, "p = 1"))
                    .collect(),
            });
        }
        let p = self.pf();
        let x = BalancedPolynomial::new(self.disc.roots.clone())?;
        let kk = kk_bound(&x)?;
        let a2 = self.variation.geo_mean_a.powi(2);
        let mean_sq = self.normalized.a().iter().map(|a| a * a).sum::<f64>() / p;
        Ok(BoundsReport {
            records: vec![
                self.check(names[0], kk.lhs, kk.rhs),
                self.check(
                    names[1],
                    x.sup_norm,
                    self.disc.a_power * self.disc.sup_norm_2m,
                ),
                self.check(names[2], mean_sq, a2 * self.disc.m.powf(2.0 / p)),
            ],
        })
    }

    /// `(1/p)Σa_j² − s_a² ≤ (1/p)Σa_j² − a²`.
    pub fn agm_step(&self) -> CheckRecord {
        let p = self.pf();
        let mean_sq = self.normalized.a().iter().map(|a| a * a).sum::<f64>() / p;
        let v = &self.variation;
        self.check(
            "agm_step",
            mean_sq - v.mean_a * v.mean_a,
            mean_sq - v.geo_mean_a * v.geo_mean_a,
        )
    }

    /// `‖D″‖_{C(L)} ≤ 4p⁴M / |L|²`.
    pub fn markov_diagnostic(&self) -> Result<CheckRecord> {
        let p = self.pf();
        let (lo, hi) = self.bands.hull;
        let d2 = self.disc.disc.derivative().derivative();
        let lhs = d2.sup_norm(lo, hi)?.norm;
        let len = self.bands.hull_length;
        Ok(self.check(
            "markov_second_derivative",
            lhs,
            4.0 * p.powi(4) * self.disc.m / (len * len),
        ))
    }

    /// `|γ| ≥ (|L|/p²)·√((M−1)/M)` always (with `M ≤ 1 + 1e-8` read as
    /// `M = 1`); when `M ≥ 2` also
    /// `|γ| ≥ |L|/(√2 p²)` and `max a_j < √(p/2)·|L| ≤ p²√p·|γ|`.
    pub fn gap_lower_diagnostic(&self) -> BoundsReport {
        let p = self.pf();
        let m = self.disc.m;
        let len = self.bands.hull_length;
        let g = self.bands.max_gap;
        let mut report = BoundsReport::default();
        // M − 1 at rounding level would be blown up by the square root.
        let excess = if m <= 1.0 + M_ONE_SLACK { 0.0 } else { m - 1.0 };
        let from_m = len / (p * p) * (excess / m).sqrt();
        report.push(self.check("gap_lower_from_m", from_m, g));
        if m >= 2.0 {
            let amax = self.normalized.a().iter().copied().fold(0.0, f64::max);
            let hull_term = (p / 2.0).sqrt() * len;
            report.push(self.check("gap_lower_large_m", len / (2f64.sqrt() * p * p), g));
            report.push(self.check("max_a_large_m", amax, hull_term));
            report.push(self.check("hull_large_m", hull_term, p * p * p.sqrt() * g));
        } else {
            for name in ["gap_lower_large_m", "max_a_large_m", "hull_large_m"] {
                report.push(CheckRecord::skipped(name, "M < 2"));
            }
        }
        report
    }

    /// Variance bounds on the `1 < M < 2` branch:
    /// `(1/p)Σ(a_j − s_a)² ≤ 2a²(M−1)/p`, `≤ p³/4·|γ|²`, and
    /// `|a_j − s_a| ≤ p²/2·|γ|`.
    pub fn variance_bound(&self) -> BoundsReport {
        let names = [
            "moderate_m_tangent",
            "moderate_m_variance",
            "moderate_m_entry",
        ];
        let m = self.disc.m;
        let branch = if m <= 1.0 + M_ONE_SLACK {
            Some("M = 1")
        } else if m >= 2.0 {
            Some("M >= 2")
        } else {
            None
        };
        if let Some(b) = branch {
            return BoundsReport {
                records: names.iter().map(|n| CheckRecord::skipped(*n, b)).collect(),
            };
        }
        let p = self.pf();
        let g = self.bands.max_gap;
        let sa = self.variation.mean_a;
        let a = self.normalized.a();
        let variance = a.iter().map(|x| (x - sa).powi(2)).sum::<f64>() / p;
        let worst = a.iter().map(|x| (x - sa).abs()).fold(0.0, f64::max);
        let a2 = self.variation.geo_mean_a.powi(2);
        BoundsReport {
            records: vec![
                self.check(names[0], variance, 2.0 * a2 * (m - 1.0) / p),
                self.check(names[1], variance, p.powi(3) / 4.0 * g * g),
                self.check(names[2], worst, p * p / 2.0 * g),
            ],
        }
    }

    /// Gap lengths against a constant comparator matrix.
    pub fn perturbation_gap_bound(&self) -> PerturbationReport {
        let (amin, amax) = range(self.normalized.a());
        let (bmin, bmax) = range(self.normalized.b());
        let alpha = 0.5 * (amin + amax);
        let beta = 0.5 * (bmin + bmax);
        let sup_a_dev = self
            .normalized
            .a()
            .iter()
            .map(|a| (a - alpha).abs())
            .fold(0.0, f64::max);
        let sup_b_dev = self
            .normalized
            .b()
            .iter()
            .map(|b| (b - beta).abs())
            .fold(0.0, f64::max);
        let v = &self.variation;
        let norm_bound = v.omega_b + 2.0 * v.omega_a;
        let gap_checks = self
            .bands
            .gaps
            .iter()
            .map(|g| {
                self.check(
                    &format!("perturbation_gap_{}", g.index),
                    g.length,
                    2.0 * norm_bound,
                )
            })
            .collect();
        PerturbationReport {
            alpha,
            beta,
            sup_b_dev,
            sup_a_dev,
            norm_bound,
            midpoint_bound: sup_b_dev + 2.0 * sup_a_dev,
            gap_checks,
        }
    }

    /// Summary records for the perturbation bound.
    pub fn perturbation_records(&self) -> BoundsReport {
        let pr = self.perturbation_gap_bound();
        let g = self.bands.max_gap;
        BoundsReport {
            records: vec![
                self.check("perturbation_max_gap", g, 2.0 * pr.norm_bound),
                self.check("perturbation_midpoint", g, 2.0 * pr.midpoint_bound),
            ],
        }
    }

    /// Trace identities, Dirichlet localization, hull and root bounds, and
    /// the consistency of the discriminant computations.
    pub fn structural_checks(&self) -> Result<BoundsReport> {
        let j = &self.normalized;
        let p = self.pf();
        let norm = j.norm_bound();
        let mut report = BoundsReport::default();

        if j.period() < 2 {
            report.push(CheckRecord::skipped("trace_identity", "p = 1"));
            report.push(CheckRecord::skipped("trace_formula_b", "p = 1"));
            report.push(CheckRecord::skipped("dirichlet_in_gaps", "p = 1"));
        } else {
            let r = trace_identity_residual(j, &self.disc.roots);
            report.push(self.check("trace_identity", r, 1e-9 * p * (1.0 + norm * norm)));
            let mut worst_tr = 0.0_f64;
            let mut worst_gap = 0.0_f64;
            for m in 1..=j.period() as i64 {
                worst_tr = worst_tr.max(trace_formula_b(j, m)?.unwrap_or(0.0));
                let ds = dirichlet_spectrum(j, m)?;
                worst_gap = worst_gap.max(dirichlet_gap_violation(&self.bands, &ds));
            }
            report.push(self.check("trace_formula_b", worst_tr, 1e-8 * p * (1.0 + norm)));
            report.push(self.check("dirichlet_in_gaps", worst_gap, 1e-8));
        }

        let a = self.variation.geo_mean_a;
        report.push(self.check("hull_vs_geo_mean", 4.0 * a, self.bands.hull_length));
        let dmax = self.disc.roots.iter().fold(0.0_f64, |m, d| m.max(d.abs()));
        report.push(self.check("roots_in_hull", dmax, self.bands.hull_length));
        report.push(self.check(
            "discriminant_cross_check",
            self.disc.cross_check.max(),
            1e-8,
        ));
        report.push(self.check("band_edge_level", self.edge_level_deviation, 1e-8));
        Ok(report)
    }

    /// Every check in a fixed order.
    pub fn full_verification(&self) -> Result<BoundsReport> {
        let mut report = self.theorem_bounds();
        report.extend(self.discriminant_kk()?);
        report.push(self.agm_step());
        report.push(self.markov_diagnostic()?);
        report.extend(self.gap_lower_diagnostic());
        report.extend(self.variance_bound());
        report.extend(self.perturbation_records());
        report.extend(self.structural_checks()?);
        Ok(report)
    }
}

fn range(v: &[f64]) -> (f64, f64) {
    v.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Aggregate result of [`full_verification`].
#[derive(Debug, Clone)]
pub struct Verification {
    pub analysis: Analysis,
    pub report: BoundsReport,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.report.all_pass()
    }
}

pub fn full_verification(j: &PeriodicJacobi) -> Result<Verification> {
    full_verification_with(j, DEFAULT_TOL)
}

pub fn full_verification_with(j: &PeriodicJacobi, tol: f64) -> Result<Verification> {
    let analysis = Analysis::with_tolerance(j, tol)?;
    let report = analysis.full_verification()?;
    Ok(Verification { analysis, report })
}

pub fn theorem_bounds(j: &PeriodicJacobi) -> Result<BoundsReport> {
    Ok(Analysis::new(j)?.theorem_bounds())
}

pub fn markov_diagnostic(j: &PeriodicJacobi) -> Result<CheckRecord> {
    Analysis::new(j)?.markov_diagnostic()
}

pub fn gap_lower_diagnostic(j: &PeriodicJacobi) -> Result<BoundsReport> {
    Ok(Analysis::new(j)?.gap_lower_diagnostic())
}

pub fn variance_bound(j: &PeriodicJacobi) -> Result<BoundsReport> {
    Ok(Analysis::new(j)?.variance_bound())
}

pub fn perturbation_gap_bound(j: &PeriodicJacobi) -> Result<PerturbationReport> {
    Ok(Analysis::new(j)?.perturbation_gap_bound())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jac(a: &[f64], b: &[f64]) -> PeriodicJacobi {
        PeriodicJacobi::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn p2() -> PeriodicJacobi {
        jac(&[1.0, 1.0], &[1.0, -1.0])
    }

    fn quartic() -> PeriodicJacobi {
        jac(&[1.0, 2.0, 1.0, 2.0], &[0.0; 4])
    }

    #[test]
    fn record_semantics() {
        let r = CheckRecord::check("x", 1.0, 2.0, DEFAULT_TOL);
        assert_eq!(
            (r.status.clone(), r.ratio, r.slack),
            (Status::Pass, Some(0.5), 1.0)
        );
        let r = CheckRecord::check("x", 0.0, 0.0, DEFAULT_TOL);
        assert_eq!((r.status.clone(), r.ratio), (Status::Degenerate, Some(0.0)));
        let r = CheckRecord::check("x", 1e-3, 0.0, DEFAULT_TOL);
        assert_eq!((r.status.clone(), r.ratio), (Status::Fail, None));
        let r = CheckRecord::check("x", 1.0 + 1e-10, 1.0, DEFAULT_TOL);
        assert_eq!(r.status, Status::Pass);
        let r = CheckRecord::check("x", 1.0 + 1e-10, 1.0, STRICT_TOL);
        assert_eq!(r.status, Status::Fail);
        assert!(CheckRecord::skipped("x", "M = 1").ok());
        assert_eq!(
            Status::Skipped("M = 1".into()).to_string(),
            "SKIPPED(M = 1)"
        );
    }

    #[test]
    fn theorem_examples() {
        let r = theorem_bounds(&p2()).unwrap();
        let i = r.get("omega_b_upper").unwrap();
        assert_eq!(i.lhs, 2.0);
        assert!((i.ratio.unwrap() - 1.0).abs() < 1e-12);
        let ii = r.get("omega_a_upper").unwrap();
        assert_eq!(ii.lhs, 0.0);
        assert!((ii.rhs - 4.0 * 2f64.sqrt() * 2.0).abs() < 1e-12);
        let iii = r.get("max_gap_lower").unwrap();
        assert!((iii.lhs - 0.5).abs() < 1e-14 && iii.rhs == 2.0);
        assert!(r.all_pass());

        let r = theorem_bounds(&PeriodicJacobi::constant(1.0, 0.0, 5).unwrap()).unwrap();
        assert!(r.records.iter().all(|c| c.status == Status::Degenerate));

        let r = theorem_bounds(&quartic()).unwrap();
        assert!((r.get("omega_b_upper").unwrap().rhs - 12.0).abs() < 1e-11);
        let ii = r.get("omega_a_upper").unwrap();
        assert_eq!(ii.lhs, 1.0);
        assert!((ii.rhs - 64.0).abs() < 1e-11);
        assert!((r.get("max_gap_lower").unwrap().lhs - 0.5).abs() < 1e-13);
        assert!(r.all_pass());
    }

    #[test]
    fn kk_examples() {
        let s3 = 3f64.sqrt();
        let k = kk_bound(&BalancedPolynomial::new(vec![s3, -s3]).unwrap()).unwrap();
        assert!((k.lhs - 6.0).abs() < 1e-12 && (k.rhs - 6.0).abs() < 1e-12);
        let x = BalancedPolynomial::new(vec![-s3, 0.0, s3]).unwrap();
        assert!((x.sup_norm - 2.0).abs() < 1e-12);
        assert!((x.sigma2 + 3.0).abs() < 1e-12);
        let k = kk_bound(&x).unwrap();
        assert!((k.lhs - 6.0).abs() < 1e-12 && (k.rhs - 6.0).abs() < 1e-12);
        let k = kk_bound(&BalancedPolynomial::new(vec![0.0, 0.0]).unwrap()).unwrap();
        assert_eq!((k.lhs, k.rhs), (0.0, 0.0));

        assert!(BalancedPolynomial::new(vec![1.0, 2.0]).is_err());
        assert!(kk_bound(&BalancedPolynomial::new(vec![0.0]).unwrap()).is_err());
    }

    #[test]
    fn markov_examples() {
        let r = markov_diagnostic(&p2()).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-12);
        assert!((r.rhs - 4.8).abs() < 1e-12);
        let r = markov_diagnostic(&PeriodicJacobi::constant(1.0, 0.0, 3).unwrap()).unwrap();
        assert!((r.lhs - 12.0).abs() < 1e-11);
        assert!((r.rhs - 20.25).abs() < 1e-11);
        let r = markov_diagnostic(&jac(&[1.5], &[0.2])).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert!(r.ok());
    }

    #[test]
    fn gap_lower_examples() {
        let r = gap_lower_diagnostic(&p2()).unwrap();
        let from_m = r.get("gap_lower_from_m").unwrap();
        let expected = 2.0 * 5f64.sqrt() / 4.0 * (1.0f64 / 3.0).sqrt();
        assert!((from_m.lhs - expected).abs() < 1e-12 && (expected - 0.6455).abs() < 1e-4);
        assert!(r.get("gap_lower_large_m").unwrap().is_skipped());

        let r = gap_lower_diagnostic(&PeriodicJacobi::constant(2.0, 1.0, 4).unwrap()).unwrap();
        let from_m = r.get("gap_lower_from_m").unwrap();
        assert_eq!(
            (from_m.lhs, from_m.rhs, from_m.status.clone()),
            (0.0, 0.0, Status::Degenerate)
        );

        let r = gap_lower_diagnostic(&quartic()).unwrap();
        let large_m = r.get("gap_lower_large_m").unwrap();
        assert!((large_m.lhs - 6.0 / (2f64.sqrt() * 16.0)).abs() < 1e-12);
        let amax_rec = r.get("max_a_large_m").unwrap();
        assert_eq!(amax_rec.lhs, 2.0);
        assert!((amax_rec.rhs - 2f64.sqrt() * 6.0).abs() < 1e-12);
        assert!((r.get("hull_large_m").unwrap().rhs - 64.0).abs() < 1e-11);
        assert!(r.all_pass());
    }

    #[test]
    fn variance_examples() {
        let r = variance_bound(&p2()).unwrap();
        let v = r.get("moderate_m_variance").unwrap();
        assert_eq!(v.lhs, 0.0);
        assert!((v.rhs - 8.0).abs() < 1e-12);
        let e = r.get("moderate_m_entry").unwrap();
        assert!((e.rhs - 4.0).abs() < 1e-12);
        assert!(r.all_pass());

        let r = variance_bound(&PeriodicJacobi::constant(1.0, 0.0, 3).unwrap()).unwrap();
        assert!(r
            .records
            .iter()
            .all(|c| c.status == Status::Skipped("M = 1".into())));
        let r = variance_bound(&quartic()).unwrap();
        assert!(r
            .records
            .iter()
            .all(|c| c.status == Status::Skipped("M >= 2".into())));
    }

    #[test]
    fn perturbation_examples() {
        let pr = perturbation_gap_bound(&p2()).unwrap();
        assert_eq!((pr.alpha, pr.beta, pr.norm_bound), (1.0, 0.0, 2.0));
        assert_eq!(pr.midpoint_bound, 1.0);
        assert!((pr.gap_checks[0].lhs - 2.0).abs() < 1e-14 && pr.gap_checks[0].rhs == 4.0);

        let pr = perturbation_gap_bound(&quartic()).unwrap();
        assert_eq!((pr.norm_bound, pr.alpha, pr.sup_a_dev), (2.0, 1.5, 0.5));
        assert!(pr.gap_checks.iter().all(CheckRecord::ok));

        let pr = perturbation_gap_bound(&PeriodicJacobi::constant(1.0, 2.0, 3).unwrap()).unwrap();
        assert!(pr.gap_checks.iter().all(|c| c.status == Status::Degenerate));
    }

    #[test]
    fn normalization_is_recorded() {
        let a = Analysis::new(&jac(&[1.0, 1.0], &[3.0, 1.0])).unwrap();
        assert_eq!(a.diagonal_shift, 2.0);
        assert_eq!(a.normalized.b(), &[1.0, -1.0]);
        let a = Analysis::new(&p2()).unwrap();
        assert_eq!(a.diagonal_shift, 0.0);
    }

    #[test]
    fn full_verification_examples() {
        let v = full_verification(&p2()).unwrap();
        assert!(v.passed(), "{:#?}", v.report.failures().collect::<Vec<_>>());
        for p in 1..=12 {
            let v = full_verification(&PeriodicJacobi::constant(1.0, 0.0, p).unwrap()).unwrap();
            assert!(
                v.passed(),
                "p = {p}: {:#?}",
                v.report.failures().collect::<Vec<_>>()
            );
            assert_eq!(v.analysis.bands.max_gap, 0.0);
        }
    }

    #[test]
    fn strict_mode_on_worked_instance() {
        let v = full_verification_with(&p2(), STRICT_TOL).unwrap();
        assert!(v.passed(), "{:#?}", v.report.failures().collect::<Vec<_>>());
    }
}

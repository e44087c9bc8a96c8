//! Seeded random sweeps.
//!
//! The generator is SplitMix64 seeded directly with the configured `seed`;
//! uniform reals take the top 53 bits of each output, `(u >> 11) · 2⁻⁵³`.
//! Matrices are drawn sequentially (so the stream never depends on thread
//! scheduling) and then verified in parallel, with rows kept in sample order.

use std::io::Write;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use super::config::SweepConfig;
use super::format::csv_num;
use crate::bounds::{full_verification, BoundsReport};
use crate::error::Result;
use crate::model::PeriodicJacobi;

pub const SWEEP_HEADER: &str =
    "seed_index,p,omega_a,omega_b,max_gap,ratio_b_upper,ratio_a_upper,ratio_lower,M,all_pass";

/// Uniform draws from a seeded SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`; exactly `lo` when the range is a point.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: usize, hi: usize) -> usize {
        let n = (hi - lo + 1) as f64;
        lo + ((self.unit() * n) as usize).min(hi - lo)
    }
}

/// The `count` matrices of a sweep, in sample order.
pub fn sample_matrices(cfg: &SweepConfig) -> Result<Vec<PeriodicJacobi>> {
    cfg.validate()?;
    let mut s = Sampler::new(cfg.seed);
    (0..cfg.count)
        .map(|_| {
            let p = s.int(cfg.p_min, cfg.p_max);
            let (a, b): (Vec<f64>, Vec<f64>) = match cfg.epsilon {
                Some(eps) => (0..p)
                    .map(|_| {
                        let a = 1.0 + eps * (s.unit() - 0.5);
                        (a, eps * (s.unit() - 0.5))
                    })
                    .unzip(),
                None => (0..p)
                    .map(|_| (s.uniform(cfg.a_lo, cfg.a_hi), s.uniform(cfg.b_lo, cfg.b_hi)))
                    .unzip(),
            };
            PeriodicJacobi::new(a, b)
        })
        .collect()
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub seed_index: usize,
    pub p: usize,
    pub omega_a: f64,
    pub omega_b: f64,
    pub max_gap: f64,
    pub ratio_b_upper: Option<f64>,
    pub ratio_a_upper: Option<f64>,
    pub ratio_lower: Option<f64>,
    pub m: f64,
    pub all_pass: bool,
    /// Failed records, or the error that stopped the analysis.
    pub failures: Vec<String>,
}

impl SweepRow {
    pub fn evaluate(seed_index: usize, j: &PeriodicJacobi) -> Self {
        let v = j.variation();
        let mut row = SweepRow {
            seed_index,
            p: j.period(),
            omega_a: v.omega_a,
            omega_b: v.omega_b,
            max_gap: f64::NAN,
            ratio_b_upper: None,
            ratio_a_upper: None,
            ratio_lower: None,
            m: f64::NAN,
            all_pass: false,
            failures: Vec::new(),
        };
        match full_verification(j) {
            Ok(ver) => {
                let ratio = |r: &BoundsReport, name: &str| r.get(name).and_then(|c| c.ratio);
                row.max_gap = ver.analysis.bands.max_gap;
                row.m = ver.analysis.disc.m;
                row.ratio_b_upper = ratio(&ver.report, "omega_b_upper");
                row.ratio_a_upper = ratio(&ver.report, "omega_a_upper");
                row.ratio_lower = ratio(&ver.report, "max_gap_lower");
                row.all_pass = ver.passed();
                row.failures = ver.report.failures().map(|c| c.name.clone()).collect();
            }
            Err(e) => row.failures.push(e.to_string()),
        }
        row
    }

    pub fn to_csv(&self) -> String {
        let r = |x: Option<f64>| x.map_or_else(|| "inf".to_string(), csv_num);
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.seed_index,
            self.p,
            csv_num(self.omega_a),
            csv_num(self.omega_b),
            csv_num(self.max_gap),
            r(self.ratio_b_upper),
            r(self.ratio_a_upper),
            r(self.ratio_lower),
            csv_num(self.m),
            self.all_pass
        )
    }
}

/// Maxima over a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SweepSummary {
    pub count: usize,
    pub failures: usize,
    pub max_ratio_b_upper: f64,
    pub max_ratio_a_upper: f64,
    pub max_ratio_lower: f64,
}

impl SweepSummary {
    pub fn of(rows: &[SweepRow]) -> Self {
        let max = |f: fn(&SweepRow) -> Option<f64>| rows.iter().filter_map(f).fold(0.0, f64::max);
        Self {
            count: rows.len(),
            failures: rows.iter().filter(|r| !r.all_pass).count(),
            max_ratio_b_upper: max(|r| r.ratio_b_upper),
            max_ratio_a_upper: max(|r| r.ratio_a_upper),
            max_ratio_lower: max(|r| r.ratio_lower),
        }
    }
}

/// Draw and verify every sample of a sweep.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    let mats = sample_matrices(cfg)?;
    Ok(mats
        .par_iter()
        .enumerate()
        .map(|(i, j)| SweepRow::evaluate(i, j))
        .collect())
}

/// Header plus one LF-terminated line per row.
pub fn write_csv(rows: &[SweepRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    out.flush()
}

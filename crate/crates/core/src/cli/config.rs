//! JSON configuration files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::error::{Error, Result};
use crate::model::PeriodicJacobi;

/// `{"a": [...], "b": [...], "label": "optional"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixConfig {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixConfig {
    pub fn matrix(&self) -> Result<PeriodicJacobi> {
        PeriodicJacobi::new(self.a.clone(), self.b.clone())
    }
}

/// Random sweep parameters.
///
/// Without `epsilon`, each sample draws `p` uniformly from `p_min..=p_max`
/// and every `a_j`, `b_j` uniformly from its range. With `epsilon`, samples
/// perturb the constant matrix `a = 1, b = 0` by independent uniform offsets
/// in `[−ε/2, ε/2]`, so `ω_a, ω_b ≤ ε`; the `a`/`b` ranges are then unused.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub p_min: usize,
    pub p_max: usize,
    #[serde(default = "default_a_lo")]
    pub a_lo: f64,
    #[serde(default = "default_a_hi")]
    pub a_hi: f64,
    #[serde(default = "default_b_lo")]
    pub b_lo: f64,
    #[serde(default = "default_b_hi")]
    pub b_hi: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
}

fn default_a_lo() -> f64 {
    0.5
}
fn default_a_hi() -> f64 {
    2.0
}
fn default_b_lo() -> f64 {
    -1.0
}
fn default_b_hi() -> f64 {
    1.0
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.count == 0 {
            return bad("count must be positive".into());
        }
        if self.p_min == 0 || self.p_min > self.p_max {
            return bad(format!(
                "period range [{}, {}] must be nonempty with p_min >= 1",
                self.p_min, self.p_max
            ));
        }
        let finite = [self.a_lo, self.a_hi, self.b_lo, self.b_hi]
            .iter()
            .all(|x| x.is_finite());
        if !finite {
            return bad("range endpoints must be finite".into());
        }
        if !(self.a_lo > 0.0 && self.a_lo <= self.a_hi) {
            return bad(format!(
                "a range [{}, {}] must be nonempty with a_lo > 0",
                self.a_lo, self.a_hi
            ));
        }
        if self.b_lo > self.b_hi {
            return bad(format!("b range [{}, {}] is empty", self.b_lo, self.b_hi));
        }
        if let Some(eps) = self.epsilon {
            // a = 1 ± ε/2 must stay positive.
            if !(eps.is_finite() && (0.0..2.0).contains(&eps)) {
                return bad(format!("epsilon = {eps} must lie in [0, 2)"));
            }
        }
        Ok(())
    }
}

fn read(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))
}

pub fn load_matrix_config(path: &Path) -> std::result::Result<MatrixConfig, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

pub fn load_sweep_config(path: &Path) -> std::result::Result<SweepConfig, CliError> {
    let cfg: SweepConfig = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    cfg.validate()
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    Ok(cfg)
}

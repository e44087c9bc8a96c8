//! The periodic Jacobi matrix and its elementary invariants.
//!
//! A two-sided infinite Jacobi matrix with off-diagonal entries `a_j > 0` and
//! diagonal entries `b_j` is stored through one period only. The public API
//! uses the conventional 1-based labels: `a()[0]` holds `a_1`, `a()[p - 1]`
//! holds `a_p`, and every index-taking accessor reduces its argument modulo
//! `p`, so `a_0 = a_p`, `b_{p+1} = b_1` and so on.

use crate::error::{Error, Result};

/// A `p`-periodic Jacobi matrix, stored as one period `a_1..a_p`, `b_1..b_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicJacobi {
    a: Vec<f64>,
    b: Vec<f64>,
}

/// Oscillation of both diagonals together with the two means of `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationReport {
    pub omega_a: f64,
    pub omega_b: f64,
    /// Geometric mean `(a_1 ⋯ a_p)^{1/p}`.
    pub geo_mean_a: f64,
    /// Arithmetic mean `(a_1 + ⋯ + a_p) / p`.
    pub mean_a: f64,
}

impl PeriodicJacobi {
    /// Validates one period of entries. `a[i]` is `a_{i+1}`, `b[i]` is `b_{i+1}`.
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                a_len: a.len(),
                b_len: b.len(),
            });
        }
        if a.is_empty() {
            return Err(Error::Empty);
        }
        for (index, &value) in a.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite {
                    field: "a",
                    index,
                    value,
                });
            }
            if value <= 0.0 {
                return Err(Error::NonPositive { index, value });
            }
        }
        if let Some((index, &value)) = b.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite {
                field: "b",
                index,
                value,
            });
        }
        Ok(Self { a, b })
    }

    /// The constant matrix `a_j = a0`, `b_j = b0`, viewed as `p`-periodic.
    pub fn constant(a0: f64, b0: f64, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        Self::new(vec![a0; p], vec![b0; p])
    }

    pub fn period(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    fn slot(&self, j: i64) -> usize {
        (j - 1).rem_euclid(self.period() as i64) as usize
    }

    /// `a_j` for any integer label `j` (cyclic).
    pub fn a_at(&self, j: i64) -> f64 {
        self.a[self.slot(j)]
    }

    /// `b_j` for any integer label `j` (cyclic).
    pub fn b_at(&self, j: i64) -> f64 {
        self.b[self.slot(j)]
    }

    /// True when `Σ b_j` vanishes up to `1e-14 · p · max|b_j|`.
    pub fn is_normalized(&self) -> bool {
        let sum: f64 = self.b.iter().sum();
        let scale = self.b.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        sum.abs() <= 1e-14 * self.period() as f64 * scale
    }

    /// Shifts the diagonal so that it sums to zero over a period.
    ///
    /// Already-normalized inputs are returned unchanged, which makes the
    /// operation idempotent bit for bit.
    pub fn normalize(&self) -> Self {
        if self.is_normalized() {
            return self.clone();
        }
        let shift = self.diagonal_mean();
        Self {
            a: self.a.clone(),
            b: self.b.iter().map(|v| v - shift).collect(),
        }
    }

    pub fn diagonal_mean(&self) -> f64 {
        self.b.iter().sum::<f64>() / self.period() as f64
    }

    /// Rotates the origin: the result has `a'_j = a_{j+m}`, `b'_j = b_{j+m}`.
    pub fn shift_origin(&self, m: i64) -> Self {
        let p = self.period() as i64;
        let (a, b) = (1..=p)
            .map(|j| (self.a_at(j + m), self.b_at(j + m)))
            .unzip();
        Self { a, b }
    }

    /// Multiplies every entry by `t > 0`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        Self::new(
            self.a.iter().map(|v| v * t).collect(),
            self.b.iter().map(|v| v * t).collect(),
        )
    }

    pub fn variation(&self) -> VariationReport {
        let p = self.period() as f64;
        let log_sum: f64 = self.a.iter().map(|v| v.ln()).sum();
        VariationReport {
            omega_a: oscillation(&self.a),
            omega_b: oscillation(&self.b),
            geo_mean_a: (log_sum / p).exp(),
            mean_a: self.a.iter().sum::<f64>() / p,
        }
    }

    /// Geometric mean `a = (a_1 ⋯ a_p)^{1/p}`.
    pub fn geo_mean_a(&self) -> f64 {
        self.variation().geo_mean_a
    }

    /// `a_1 ⋯ a_p`, the leading-coefficient scale of the discriminant.
    pub fn a_product(&self) -> f64 {
        self.a.iter().product()
    }

    /// Upper bound `max|b_j| + 2 max a_j` for the operator norm on `ℓ²(ℤ)`.
    pub fn norm_bound(&self) -> f64 {
        let bmax = self.b.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let amax = self.a.iter().fold(0.0_f64, |m, v| m.max(*v));
        bmax + 2.0 * amax
    }
}

/// `max − min` of a finite sequence; the supremum of pairwise differences.
pub fn oscillation(values: &[f64]) -> f64 {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if values.is_empty() {
        0.0
    } else {
        hi - lo
    }
}

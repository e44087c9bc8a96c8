//! Band/gap structure `σ(J) = D⁻¹[−2, 2]` and the Dirichlet spectra.
//!
//! Band edges are the eigenvalues of the two one-period truncations with
//! periodic and antiperiodic boundary conditions. A closed gap shows up as
//! a double eigenvalue of one of them, which a symmetric eigensolver
//! resolves to full accuracy where a polynomial root finder would not.

use crate::discriminant::{eval_discriminant, special_solutions};
use crate::error::{Error, Result};
use crate::model::PeriodicJacobi;
use crate::numerics::{eigenvalues_symmetric, eigenvalues_tridiagonal, SymmetricMatrix};

/// Gaps shorter than this fraction of `|L|` are treated as closed.
pub const CLOSED_GAP_REL: f64 = 1e-9;

/// Allowed deviation of `|D|` from 2 at a computed band edge.
pub const EDGE_LEVEL_TOL: f64 = 1e-8;

/// Which level set of `D` an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// `D = +2`
    Plus,
    /// `D = −2`
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandEdge {
    pub value: f64,
    pub class: EdgeClass,
    /// `D` evaluated at `value` by the scalar recurrence.
    pub disc_value: f64,
}

/// Sorted band edges of `J`, each certified by `||D| − 2| ≤ 1e-8`.
pub fn band_edges(j: &PeriodicJacobi) -> Result<Vec<BandEdge>> {
    let mut values = truncation_eigenvalues(j, 1.0)?;
    values.extend(truncation_eigenvalues(j, -1.0)?);
    values.sort_by(f64::total_cmp);
    values
        .into_iter()
        .map(|value| {
            let disc_value = eval_discriminant(j, value);
            let dev = (disc_value.abs() - 2.0).abs();
            if dev > EDGE_LEVEL_TOL {
                return Err(Error::Consistency {
                    check: "|D| = 2 at band edge",
                    deviation: dev,
                    tolerance: EDGE_LEVEL_TOL,
                });
            }
            let class = if disc_value > 0.0 {
                EdgeClass::Plus
            } else {
                EdgeClass::Minus
            };
            Ok(BandEdge {
                value,
                class,
                disc_value,
            })
        })
        .collect()
}

/// One-period truncation with the wrap-around coupling `sign · a_p`.
/// For `p = 1` this is the scalar `b_1 + 2·sign·a_1`.
fn truncation_eigenvalues(j: &PeriodicJacobi, sign: f64) -> Result<Vec<f64>> {
    let p = j.period();
    let mut m = SymmetricMatrix::zeros(p);
    for k in 0..p {
        m.add_symmetric(k, k, 0.5 * j.b()[k]);
        let wrap = if k + 1 == p { sign } else { 1.0 };
        m.add_symmetric(k, (k + 1) % p, wrap * j.a()[k]);
    }
    eigenvalues_symmetric(&m)
}

/// One spectral band `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
}

/// The gap `γ_index = (μ⁻, μ⁺)` between bands `index − 1` and `index`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gap {
    /// 1-based, `1..=p−1`.
    pub index: usize,
    pub lower: f64,
    pub upper: f64,
    /// `μ⁺ − μ⁻` as computed.
    pub raw_length: f64,
    /// `raw_length`, or exactly zero when the gap is closed.
    pub length: f64,
    pub closed: bool,
    /// Midpoint; the degenerate location of a closed gap.
    pub location: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandStructure {
    /// `2p` sorted edges `z_0 ≤ ⋯ ≤ z_{2p−1}`.
    pub edges: Vec<f64>,
    pub bands: Vec<Band>,
    pub gaps: Vec<Gap>,
    /// Convex hull `L = [μ_0⁺, μ_p⁻]`.
    pub hull: (f64, f64),
    pub hull_length: f64,
    /// `|γ| = max_j |γ_j|`.
    pub max_gap: f64,
    /// Index of a maximal gap; `None` when `p = 1`.
    pub max_gap_index: Option<usize>,
    /// Threshold used for the closed flag (`1e-9 · |L|`).
    pub closed_threshold: f64,
}

impl BandStructure {
    /// Pairs `2p` sorted edges into `p` bands `[z_{2k}, z_{2k+1}]`.
    pub fn from_sorted_edges(edges: Vec<f64>) -> Result<Self> {
        if edges.is_empty() || !edges.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "need an even, nonzero number of edges, got {}",
                edges.len()
            )));
        }
        if edges.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidArgument("edges are not sorted".into()));
        }
        let hull = (edges[0], edges[edges.len() - 1]);
        let hull_length = hull.1 - hull.0;
        let closed_threshold = CLOSED_GAP_REL * hull_length;
        let bands: Vec<Band> = edges
            .chunks_exact(2)
            .map(|w| Band { lo: w[0], hi: w[1] })
            .collect();
        let gaps: Vec<Gap> = bands
            .windows(2)
            .enumerate()
            .map(|(k, w)| {
                let (lower, upper) = (w[0].hi, w[1].lo);
                let raw_length = upper - lower;
                let closed = raw_length <= closed_threshold;
                Gap {
                    index: k + 1,
                    lower,
                    upper,
                    raw_length,
                    length: if closed { 0.0 } else { raw_length },
                    closed,
                    location: 0.5 * (lower + upper),
                }
            })
            .collect();
        let (max_gap, max_gap_index) =
            gaps.iter()
                .fold((0.0, None), |(best, idx): (f64, Option<usize>), g| {
                    if idx.is_none() || g.length > best {
                        (g.length, Some(g.index))
                    } else {
                        (best, idx)
                    }
                });
        Ok(Self {
            edges,
            bands,
            gaps,
            hull,
            hull_length,
            max_gap,
            max_gap_index,
            closed_threshold,
        })
    }

    pub fn period(&self) -> usize {
        self.bands.len()
    }

    /// Closed gap intervals `[μ_j⁻, μ_j⁺]`.
    pub fn gap_intervals(&self) -> Vec<(f64, f64)> {
        self.gaps.iter().map(|g| (g.lower, g.upper)).collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.bands.iter().any(|b| b.lo <= x && x <= b.hi)
    }
}

/// `σ(J)` as `p` bands and `p − 1` (possibly closed) gaps.
pub fn band_structure(j: &PeriodicJacobi) -> Result<BandStructure> {
    let edges = band_edges(j)?.into_iter().map(|e| e.value).collect();
    BandStructure::from_sorted_edges(edges)
}

/// Zeros `ξ_1^{(m)} < ⋯ < ξ_{p−1}^{(m)}` of `s_{m+p−1}(·, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletSpectrum {
    pub base_index: i64,
    pub xi: Vec<f64>,
}

/// Eigenvalues of the `(p−1)×(p−1)` truncation with diagonal
/// `b_m..b_{m+p−2}` and off-diagonal `a_m..a_{m+p−3}`. Empty for `p = 1`.
pub fn dirichlet_spectrum(j: &PeriodicJacobi, m: i64) -> Result<DirichletSpectrum> {
    let p = j.period() as i64;
    if p == 1 {
        return Ok(DirichletSpectrum {
            base_index: m,
            xi: vec![],
        });
    }
    let diag: Vec<f64> = (m..m + p - 1).map(|n| j.b_at(n)).collect();
    let off: Vec<f64> = (m..m + p - 2).map(|n| j.a_at(n)).collect();
    let xi = eigenvalues_tridiagonal(&diag, &off)?;

    // Cross-check against the monic form of s_{m+p−1}.
    let scale: f64 = off.iter().product();
    let s = special_solutions(j, m).s(m + p - 1).scale(scale);
    for &v in &xi {
        let tol = 1e-8 * (1.0 + v.abs()).powi(p as i32 - 1);
        let r = s.eval(v).abs();
        if r > tol {
            return Err(Error::Consistency {
                check: "Dirichlet eigenvalue is a zero of s_{m+p-1}",
                deviation: r,
                tolerance: tol,
            });
        }
    }
    Ok(DirichletSpectrum { base_index: m, xi })
}

/// Largest distance by which some `ξ_j^{(m)}` falls outside `[μ_j⁻, μ_j⁺]`.
pub fn dirichlet_gap_violation(bands: &BandStructure, ds: &DirichletSpectrum) -> f64 {
    bands
        .gaps
        .iter()
        .zip(&ds.xi)
        .map(|(g, &x)| (g.lower - x).max(x - g.upper).max(0.0))
        .fold(0.0, f64::max)
}

/// Residual of `b_m − b_{m−1} = Σ_j (ξ_j^{(m)} − ξ_j^{(m+1)})` on the
/// normalized matrix. `None` for `p = 1`.
pub fn trace_formula_b(j: &PeriodicJacobi, m: i64) -> Result<Option<f64>> {
    if j.period() < 2 {
        return Ok(None);
    }
    let n = j.normalize();
    let here = dirichlet_spectrum(&n, m)?;
    let next = dirichlet_spectrum(&n, m + 1)?;
    let rhs: f64 = here.xi.iter().zip(&next.xi).map(|(x, y)| x - y).sum();
    Ok(Some(((n.b_at(m) - n.b_at(m - 1)) - rhs).abs()))
}

//! The Hill discriminant of a periodic Jacobi matrix.
//!
//! `D(λ)` is computed three independent ways:
//!
//! * from the two special solutions of `a_{n−1} y_{n−1} + b_n y_n + a_n y_{n+1} = λ y_n`
//!   with initial data `s_{m−1} = 0, s_m = 1` and `c_{m−1} = −1, c_m = 0`,
//!   as the polynomial `D = s_{m+p} − c_{m+p−1}`;
//! * pointwise, by running the same recurrence at a fixed numeric `λ`;
//! * as `det(λ − Φ_m) / (a_1 ⋯ a_p)` where `Φ_m` is the one-period Hermitian
//!   Floquet matrix with imaginary corners `±i·a_{m+p−1}`.
//!
//! The zeros `d_j` of `D` are the eigenvalues of `Φ_m` and do not depend on `m`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::PeriodicJacobi;
use crate::numerics::{
    chebyshev_nodes, eigenvalues_hermitian, interpolate, HermitianMatrix, Polynomial,
};

/// Special solutions `s_n(·, m)` and `c_n(·, m)` for `n = m−1 ..= m+p`.
#[derive(Debug, Clone)]
pub struct SolutionPair {
    pub base_index: i64,
    s: Vec<Polynomial>,
    c: Vec<Polynomial>,
}

impl SolutionPair {
    fn slot(&self, n: i64) -> usize {
        let k = n - (self.base_index - 1);
        assert!(
            (0..self.s.len() as i64).contains(&k),
            "index {n} outside the stored window {}..={}",
            self.base_index - 1,
            self.base_index - 2 + self.s.len() as i64
        );
        k as usize
    }

    /// `s_n(·, m)`; valid for `m−1 ≤ n ≤ m+p`.
    pub fn s(&self, n: i64) -> &Polynomial {
        &self.s[self.slot(n)]
    }

    /// `c_n(·, m)`; valid for `m−1 ≤ n ≤ m+p`.
    pub fn c(&self, n: i64) -> &Polynomial {
        &self.c[self.slot(n)]
    }

    pub fn s_sequence(&self) -> &[Polynomial] {
        &self.s
    }

    pub fn c_sequence(&self) -> &[Polynomial] {
        &self.c
    }
}

/// Builds `s_n` and `c_n` by the coefficient-space recurrence
/// `a_n y_{n+1} = (λ − b_n) y_n − a_{n−1} y_{n−1}`.
pub fn special_solutions(j: &PeriodicJacobi, m: i64) -> SolutionPair {
    let p = j.period() as i64;
    let x = Polynomial::x();
    let step = |prev: &Polynomial, cur: &Polynomial, n: i64| -> Polynomial {
        let shifted = &x - &Polynomial::constant(j.b_at(n));
        let lead = &shifted * cur;
        (&lead - &prev.scale(j.a_at(n - 1))).scale(1.0 / j.a_at(n))
    };
    let mut s = vec![Polynomial::zero(), Polynomial::constant(1.0)];
    let mut c = vec![Polynomial::constant(-1.0), Polynomial::zero()];
    for n in m..m + p {
        let k = (n - m + 1) as usize;
        let next_s = step(&s[k - 1], &s[k], n);
        let next_c = step(&c[k - 1], &c[k], n);
        s.push(next_s);
        c.push(next_c);
    }
    SolutionPair {
        base_index: m,
        s,
        c,
    }
}

fn discriminant_from(j: &PeriodicJacobi, m: i64) -> Polynomial {
    let p = j.period() as i64;
    let pair = special_solutions(j, m);
    pair.s(m + p) - pair.c(m + p - 1)
}

/// `D(λ) = s_{m+p}(λ, m) − c_{m+p−1}(λ, m)`.
///
/// Computed from both `m = 0` and `m = 1`; a disagreement above `1e-10`
/// (relative, coefficient-wise) is reported as a numerical breakdown.
pub fn hill_discriminant(j: &PeriodicJacobi) -> Result<Polynomial> {
    let d1 = discriminant_from(j, 1);
    if j.period() > 1 {
        let d0 = discriminant_from(j, 0);
        let dev = d0.relative_distance(&d1);
        if dev > 1e-10 {
            return Err(Error::Consistency {
                check: "discriminant m-independence",
                deviation: dev,
                tolerance: 1e-10,
            });
        }
    }
    Ok(d1)
}

/// `D(λ)` at a numeric point, by the scalar recurrence (no coefficients).
pub fn eval_discriminant(j: &PeriodicJacobi, lambda: f64) -> f64 {
    let p = j.period() as i64;
    let (mut s_prev, mut s_cur) = (0.0, 1.0);
    let (mut c_prev, mut c_cur) = (-1.0, 0.0);
    let mut c_last = c_cur;
    for n in 1..=p {
        let (a_prev, a_n, b_n) = (j.a_at(n - 1), j.a_at(n), j.b_at(n));
        let s_next = ((lambda - b_n) * s_cur - a_prev * s_prev) / a_n;
        let c_next = ((lambda - b_n) * c_cur - a_prev * c_prev) / a_n;
        c_last = c_cur;
        (s_prev, s_cur) = (s_cur, s_next);
        (c_prev, c_cur) = (c_cur, c_next);
    }
    // After p steps s_cur = s_{p+1} and c_last = c_p, i.e. m = 1.
    s_cur - c_last
}

/// `Φ_m`: the Hermitian one-period matrix whose characteristic polynomial
/// is `(a_1 ⋯ a_p) · D(λ)`.
#[derive(Debug, Clone)]
pub struct FloquetMatrix {
    pub base_index: i64,
    pub matrix: HermitianMatrix,
}

/// Site `k` (0-based) of `Φ_m` carries `b_{m+k}`; sites `k` and `k+1` are
/// coupled by `a_{m+k}`, and the wrap-around coupling between the last and
/// first site carries the phase that puts `+i·a_{m+p−1}` in the top-right
/// corner. For `p = 1` the two corner contributions cancel (`Φ = [b_1]`);
/// for `p = 2` they add onto the off-diagonal (`a_m + i·a_{m+1}`).
pub fn floquet_matrix(j: &PeriodicJacobi, m: i64) -> Result<FloquetMatrix> {
    let phi = build_floquet(j, m);
    let charpoly = characteristic_polynomial(&phi)?;
    let monic = hill_discriminant(j)?.scale(j.a_product());
    let dev = charpoly.relative_distance(&monic);
    if dev > 1e-9 {
        return Err(Error::Consistency {
            check: "Floquet characteristic polynomial",
            deviation: dev,
            tolerance: 1e-9,
        });
    }
    Ok(FloquetMatrix {
        base_index: m,
        matrix: phi,
    })
}

fn build_floquet(j: &PeriodicJacobi, m: i64) -> HermitianMatrix {
    let p = j.period();
    let mut h = HermitianMatrix::zeros(p);
    for k in 0..p {
        let label = m + k as i64;
        h.add_hermitian(k, k, Complex64::new(0.5 * j.b_at(label), 0.0));
        let coupling = j.a_at(label);
        if k + 1 < p {
            h.add_hermitian(k, k + 1, Complex64::new(coupling, 0.0));
        } else {
            h.add_hermitian(k, 0, Complex64::new(0.0, -coupling));
        }
    }
    h
}

/// `det(λ − A)` by the Faddeev–LeVerrier recursion in complex arithmetic.
/// The imaginary parts must vanish for Hermitian input.
pub fn characteristic_polynomial(a: &HermitianMatrix) -> Result<Polynomial> {
    let n = a.order();
    let zero = Complex64::new(0.0, 0.0);
    let mut coeffs = vec![zero; n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = vec![zero; n * n];
    let mut amk = vec![zero; n * n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
        let mut next = amk.clone();
        for i in 0..n {
            next[i * n + i] += coeffs[n - k + 1];
        }
        mk.copy_from_slice(&next);
        for i in 0..n {
            for jj in 0..n {
                amk[i * n + jj] = (0..n).map(|l| a.get(i, l) * mk[l * n + jj]).sum();
            }
        }
        let tr: Complex64 = (0..n).map(|i| amk[i * n + i]).sum();
        coeffs[n - k] = -tr / k as f64;
    }
    let scale = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.norm()));
    let imag = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.im.abs()));
    if imag > 1e-9 * scale {
        return Err(Error::Consistency {
            check: "real characteristic polynomial",
            deviation: imag / scale,
            tolerance: 1e-9,
        });
    }
    Ok(Polynomial::new(coeffs.iter().map(|c| c.re).collect()))
}

/// Zeros `d_1 < ⋯ < d_p` of `D`, as eigenvalues of `Φ_0`.
pub fn discriminant_roots(j: &PeriodicJacobi) -> Result<Vec<f64>> {
    let phi = floquet_matrix(j, 0)?;
    let roots = eigenvalues_hermitian(&phi.matrix)?;
    let worst = roots
        .iter()
        .fold(0.0_f64, |m, &d| m.max(eval_discriminant(j, d).abs()));
    if worst > 1e-8 {
        return Err(Error::Consistency {
            check: "discriminant vanishes at Floquet eigenvalues",
            deviation: worst,
            tolerance: 1e-8,
        });
    }
    Ok(roots)
}

/// `|Σ d_j² − Σ (b_j² + 2a_j²)|`, or `None` for `p = 1` where the corner
/// terms of `Φ` cancel and the identity does not apply.
pub fn trace_identity(j: &PeriodicJacobi) -> Result<Option<f64>> {
    if j.period() < 2 {
        return Ok(None);
    }
    let d = discriminant_roots(j)?;
    Ok(Some(trace_identity_residual(j, &d)))
}

pub(crate) fn trace_identity_residual(j: &PeriodicJacobi, roots: &[f64]) -> f64 {
    let lhs: f64 = roots.iter().map(|d| d * d).sum();
    let rhs: f64 = j
        .a()
        .iter()
        .zip(j.b())
        .map(|(a, b)| b * b + 2.0 * a * a)
        .sum();
    (lhs - rhs).abs()
}

/// Half the sup-norm of `D` over an interval, with a maximizing point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNormDatum {
    /// `M = ‖D‖ / 2`.
    pub m: f64,
    /// A point where `|D| = 2M`.
    pub nu: f64,
}

/// `M = ‖D‖_{C[lo, hi]} / 2` and its argmax.
pub fn sup_norm_m(disc: &Polynomial, lo: f64, hi: f64) -> Result<SupNormDatum> {
    let s = disc.sup_norm(lo, hi)?;
    Ok(SupNormDatum {
        m: 0.5 * s.norm,
        nu: s.argmax,
    })
}

/// Per-gap maxima of `|D|`: for each closed interval `[lo, hi]` the pair
/// `(ν_k, |D(ν_k)|)`.
pub fn gap_critical_points(disc: &Polynomial, gaps: &[(f64, f64)]) -> Result<Vec<SupNormDatum>> {
    gaps.iter()
        .map(|&(lo, hi)| sup_norm_m(disc, lo, hi))
        .collect()
}

/// Coefficient disagreement between the three routes to `(a_1⋯a_p)·D`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheck {
    pub recurrence_vs_interpolation: f64,
    pub recurrence_vs_floquet: f64,
    pub interpolation_vs_floquet: f64,
}

impl CrossCheck {
    pub fn max(&self) -> f64 {
        self.recurrence_vs_interpolation
            .max(self.recurrence_vs_floquet)
            .max(self.interpolation_vs_floquet)
    }
}

/// Compares the recurrence polynomial, an interpolant of the pointwise
/// evaluation at `p + 1` Chebyshev nodes of `[lo, hi]`, and the
/// characteristic polynomial of `Φ_0`.
pub fn cross_check(j: &PeriodicJacobi, lo: f64, hi: f64) -> Result<CrossCheck> {
    let scale = j.a_product();
    let recurrence = hill_discriminant(j)?.scale(scale);
    let nodes = chebyshev_nodes(j.period() + 1, lo, hi);
    let values: Vec<f64> = nodes
        .iter()
        .map(|&x| scale * eval_discriminant(j, x))
        .collect();
    let interpolated = interpolate(&nodes, &values)?;
    let floquet = characteristic_polynomial(&build_floquet(j, 0))?;
    Ok(CrossCheck {
        recurrence_vs_interpolation: recurrence.relative_distance(&interpolated),
        recurrence_vs_floquet: recurrence.relative_distance(&floquet),
        interpolation_vs_floquet: interpolated.relative_distance(&floquet),
    })
}

/// Everything known about `D` relative to a spectral hull `L = [lo, hi]`.
#[derive(Debug, Clone)]
pub struct DiscriminantReport {
    /// `D` itself.
    pub disc: Polynomial,
    /// `(a_1⋯a_p)·D`, monic.
    pub monic: Polynomial,
    /// `a^p = a_1⋯a_p`.
    pub a_power: f64,
    /// Zeros `d_1 < ⋯ < d_p`.
    pub roots: Vec<f64>,
    /// `2M = ‖D‖_{C(L)}`.
    pub sup_norm_2m: f64,
    pub m: f64,
    /// Global argmax of `|D|` over `L`.
    pub critical_point: f64,
    pub cross_check: CrossCheck,
}

impl DiscriminantReport {
    /// `gaps` are the closed gap intervals; `D` attains `2M` over `L` in one
    /// of them, so their maxima back up the global search.
    pub fn compute(j: &PeriodicJacobi, hull: (f64, f64), gaps: &[(f64, f64)]) -> Result<Self> {
        let disc = hill_discriminant(j)?;
        let a_power = j.a_product();
        let roots = discriminant_roots(j)?;
        let mut best = sup_norm_m(&disc, hull.0, hull.1)?;
        for g in gap_critical_points(&disc, gaps)? {
            if g.m > best.m {
                best = g;
            }
        }
        let cross_check = cross_check(j, hull.0, hull.1)?;
        Ok(Self {
            monic: disc.scale(a_power),
            disc,
            a_power,
            roots,
            sup_norm_2m: 2.0 * best.m,
            m: best.m,
            critical_point: best.nu,
            cross_check,
        })
    }
}

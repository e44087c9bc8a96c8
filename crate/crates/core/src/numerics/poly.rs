//! Real polynomials in the monomial basis.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// `c_0 + c_1 x + ⋯ + c_n x^n`, stored lowest degree first.
///
/// Leading coefficients below `1e-13 · max|c_k|` are trimmed, so the zero
/// polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

const TRIM_REL: f64 = 1e-13;

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    /// `∏ (x − r)` over the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Self::constant(1.0), |acc, &r| acc.mul_linear(r))
    }

    fn trim(&mut self) {
        let max = self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        let cut = TRIM_REL * max;
        while let Some(&last) = self.coeffs.last() {
            if last.abs() <= cut {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `Σ |c_k| |x|^k`, the natural scale of the rounding error of `eval`.
    pub fn eval_abs(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * ax + c.abs())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `(x − r) · self`.
    pub fn mul_linear(&self, r: f64) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= r * c;
        }
        Self::new(out)
    }

    /// Largest coefficient magnitude.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// Max coefficient difference relative to the larger max coefficient.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let diff = (0..n).fold(0.0_f64, |m, k| {
            m.max((self.coeff(k) - other.coeff(k)).abs())
        });
        let scale = self.max_abs_coeff().max(other.max_abs_coeff());
        if scale == 0.0 {
            diff
        } else {
            diff / scale
        }
    }

    /// Real roots of `self` inside `(lo, hi)`, located by sign changes on a
    /// uniform grid of `64 · deg + 1` points and refined by bisection to
    /// width `1e-13 · (hi − lo)`. Roots of even multiplicity are invisible
    /// to this search.
    pub fn real_roots_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return vec![],
        };
        if hi <= lo {
            return vec![];
        }
        let n = 64 * deg + 1;
        let width = 1e-13 * (hi - lo);
        let grid = |i: usize| lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let mut roots = Vec::new();
        let mut x0 = lo;
        let mut f0 = self.eval(x0);
        for i in 1..n {
            let x1 = grid(i);
            let f1 = self.eval(x1);
            if f0 == 0.0 {
                if x0 > lo {
                    roots.push(x0);
                }
            } else if f0.signum() != f1.signum() && f1 != 0.0 {
                roots.push(self.bisect(x0, x1, f0, width));
            }
            x0 = x1;
            f0 = f1;
        }
        roots
    }

    fn bisect(&self, mut lo: f64, mut hi: f64, flo: f64, width: f64) -> f64 {
        let sign_lo = flo.signum();
        while hi - lo > width {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = self.eval(mid);
            if fm == 0.0 {
                return mid;
            }
            if fm.signum() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Maximum of `|P|` over `[lo, hi]` and a point attaining it.
    ///
    /// Candidates are both endpoints and every sign-change root of `P′`
    /// inside the interval.
    pub fn sup_norm(&self, lo: f64, hi: f64) -> Result<SupNorm> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "sup-norm interval is empty: lo = {lo} > hi = {hi}"
            )));
        }
        let mut best = SupNorm {
            norm: self.eval(lo).abs(),
            argmax: lo,
        };
        let mut consider = |x: f64| {
            let v = self.eval(x).abs();
            if v > best.norm {
                best = SupNorm { norm: v, argmax: x };
            }
        };
        consider(hi);
        let dp = self.derivative();
        for r in dp.real_roots_in(lo, hi) {
            consider(r);
        }
        Ok(best)
    }
}

/// Result of [`Polynomial::sup_norm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNorm {
    pub norm: f64,
    pub argmax: f64,
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            for (j, &y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

/// Newton-form interpolation through `(xs[i], ys[i])`, expanded to the
/// monomial basis. Nodes must be distinct.
pub fn interpolate(xs: &[f64], ys: &[f64]) -> Result<Polynomial> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::InvalidArgument(
            "interpolation needs equally many nodes and values".into(),
        ));
    }
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let h = xs[i] - xs[i - level];
            if h == 0.0 {
                return Err(Error::InvalidArgument("repeated interpolation node".into()));
            }
            dd[i] = (dd[i] - dd[i - 1]) / h;
        }
    }
    // Horner on the Newton form: p = dd[n-1]; p = p·(x − x_k) + dd[k].
    let mut acc = Polynomial::constant(dd[n - 1]);
    for k in (0..n - 1).rev() {
        acc = &acc.mul_linear(xs[k]) + &Polynomial::constant(dd[k]);
    }
    Ok(acc)
}

/// `n` Chebyshev points of the first kind mapped to `[lo, hi]`.
pub fn chebyshev_nodes(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    (0..n)
        .map(|k| {
            let t = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos();
            mid + half * t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[f64]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-3.0, 0.0, 1.0]).eval(0.0), -3.0);
        assert_eq!(p(&[0.0, -3.0, 0.0, 1.0]).eval(2.0), 2.0);
        assert_eq!(Polynomial::zero().eval(12.5), 0.0);
        assert_eq!(p(&[0.25, 3.0]).eval(0.1), 0.25 + 3.0 * 0.1);
    }

    #[test]
    fn trimming_is_relative() {
        let q = p(&[1.0, 2.0, 1e-14]);
        assert_eq!(q.degree(), Some(1));
        let q = p(&[1e-20, 1e-21]);
        assert_eq!(q.degree(), Some(1));
        assert!(p(&[0.0, 0.0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1.0, 1.0]);
        let b = p(&[-1.0, 1.0]);
        assert_eq!((&a * &b).coeffs(), &[-1.0, 0.0, 1.0]);
        assert_eq!((&a - &a).degree(), None);
        assert_eq!((&a + &b).coeffs(), &[0.0, 2.0]);
        assert_eq!(
            Polynomial::from_roots(&[1.0, -1.0]).coeffs(),
            &[-1.0, 0.0, 1.0]
        );
        assert_eq!(
            p(&[0.0, -3.0, 0.0, 1.0]).derivative().coeffs(),
            &[-3.0, 0.0, 3.0]
        );
    }

    #[test]
    fn sup_norm_examples() {
        let s5 = 5f64.sqrt();
        let r = p(&[-3.0, 0.0, 1.0]).sup_norm(-s5, s5).unwrap();
        assert!((r.norm - 3.0).abs() < 1e-14);
        assert!(r.argmax.abs() < 1e-12);

        let s3 = 3f64.sqrt();
        let r = p(&[0.0, -3.0, 0.0, 1.0]).sup_norm(-s3, s3).unwrap();
        assert!((r.norm - 2.0).abs() < 1e-14);
        assert!((r.argmax.abs() - 1.0).abs() < 1e-12);

        let r = Polynomial::x().sup_norm(0.0, 1.0).unwrap();
        assert_eq!((r.norm, r.argmax), (1.0, 1.0));

        assert!(Polynomial::x().sup_norm(1.0, 0.0).is_err());
        let r = Polynomial::zero().sup_norm(-1.0, 1.0).unwrap();
        assert_eq!(r.norm, 0.0);
        let r = p(&[2.0, 1.0]).sup_norm(3.0, 3.0).unwrap();
        assert_eq!((r.norm, r.argmax), (5.0, 3.0));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let q = p(&[1.0, -2.0, 0.5, 3.0]);
        let xs = chebyshev_nodes(4, -2.0, 3.0);
        let ys: Vec<f64> = xs.iter().map(|&x| q.eval(x)).collect();
        let r = interpolate(&xs, &ys).unwrap();
        assert!(r.relative_distance(&q) < 1e-13);
        assert!(interpolate(&[1.0, 1.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn roots_in_interval() {
        let q = Polynomial::from_roots(&[-1.5, 0.25, 2.0]);
        let r = q.real_roots_in(-3.0, 3.0);
        assert_eq!(r.len(), 3);
        for (x, y) in r.iter().zip([-1.5, 0.25, 2.0]) {
            assert!((x - y).abs() < 1e-11);
        }
    }
}

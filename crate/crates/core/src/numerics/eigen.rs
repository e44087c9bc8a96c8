//! Dense symmetric and Hermitian eigenvalue kernels for small matrices.
//!
//! Everything funnels into one cyclic Jacobi rotation solver. Hermitian
//! matrices are handled through the real embedding
//! `[[Re, −Im], [Im, Re]]`, whose spectrum is the Hermitian spectrum with
//! every eigenvalue doubled.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;
const OFF_TOL: f64 = 1e-14;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds from row-major entries; rejects asymmetry above `1e-12 · ‖M‖_F`.
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "expected {n}×{n} = {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite entry {bad}")));
        }
        let m = Self { n, data };
        let norm = m.frobenius_norm();
        let mut asym = 0.0_f64;
        for i in 0..n {
            for j in i + 1..n {
                asym = asym.max((m.get(i, j) - m.get(j, i)).abs());
            }
        }
        if asym > 1e-12 * norm {
            return Err(Error::NotSymmetric { asymmetry: asym });
        }
        Ok(m)
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Adds `v` to both `(i, j)` and `(j, i)`; on the diagonal this adds `2v`.
    pub fn add_symmetric(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] += v;
        self.data[j * self.n + i] += v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// Dense complex Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn from_rows(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "expected {n}×{n} = {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        let m = Self { n, data };
        let norm = m.frobenius_norm();
        let mut dev = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((m.get(i, j) - m.get(j, i).conj()).norm());
            }
        }
        if dev > 1e-12 * norm || !norm.is_finite() {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(m)
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// Adds `v` at `(i, j)` and `conj(v)` at `(j, i)`.
    pub fn add_hermitian(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] += v;
        self.data[j * self.n + i] += v.conj();
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `[[Re, −Im], [Im, Re]]`, a real symmetric matrix of order `2n`.
    pub fn real_embedding(&self) -> SymmetricMatrix {
        let n = self.n;
        let mut out = SymmetricMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                out.data[i * 2 * n + j] = z.re;
                out.data[(i + n) * 2 * n + j + n] = z.re;
                out.data[i * 2 * n + j + n] = -z.im;
                out.data[(i + n) * 2 * n + j] = z.im;
            }
        }
        out
    }
}

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `1e-14 · ‖M‖_F`; at most 64 sweeps.
pub fn symmetric_eigen(m: &SymmetricMatrix) -> Result<SymmetricEigen> {
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = m.frobenius_norm();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off_norm = off(&a);
        if off_norm <= OFF_TOL * norm {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&i| a[i * n + i]).collect(),
        vectors: order
            .iter()
            .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
            .collect(),
    })
}

/// All eigenvalues in nondecreasing order, repeated by multiplicity.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    Ok(symmetric_eigen(m)?.values)
}

/// Eigenvalues of a Hermitian matrix through its doubled real embedding.
pub fn eigenvalues_hermitian(m: &HermitianMatrix) -> Result<Vec<f64>> {
    let doubled = eigenvalues_symmetric(&m.real_embedding())?;
    let tol = 1e-8 * m.frobenius_norm().max(f64::MIN_POSITIVE);
    doubled
        .chunks_exact(2)
        .enumerate()
        .map(|(pair, w)| {
            if (w[1] - w[0]).abs() > tol {
                Err(Error::PairingFailure {
                    pair,
                    lo: w[0],
                    hi: w[1],
                })
            } else {
                Ok(0.5 * (w[0] + w[1]))
            }
        })
        .collect()
}

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and strictly positive off-diagonal.
pub fn eigenvalues_tridiagonal(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 || offdiag.len() + 1 != n {
        return Err(Error::InvalidArgument(format!(
            "tridiagonal sizes: diagonal {n}, off-diagonal {} (need one fewer)",
            offdiag.len()
        )));
    }
    if let Some((i, &v)) = offdiag
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_nan() || **v <= 0.0)
    {
        return Err(Error::InvalidArgument(format!(
            "off-diagonal entry {i} = {v} is not positive"
        )));
    }
    let mut m = SymmetricMatrix::zeros(n);
    for (i, &d) in diag.iter().enumerate() {
        m.data[i * n + i] = d;
    }
    for (i, &e) in offdiag.iter().enumerate() {
        m.add_symmetric(i, i + 1, e);
    }
    eigenvalues_symmetric(&m)
}

//! Small dense numerical kernels: polynomials and eigenvalue solvers.

pub mod eigen;
pub mod poly;

pub use eigen::{
    eigenvalues_hermitian, eigenvalues_symmetric, eigenvalues_tridiagonal, symmetric_eigen,
    HermitianMatrix, SymmetricEigen, SymmetricMatrix,
};
pub use poly::{chebyshev_nodes, interpolate, Polynomial, SupNorm};

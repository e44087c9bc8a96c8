//! Band/gap structure of periodic Jacobi operators through the Hill
//! discriminant, and numerical checks of the two-sided bounds between the
//! oscillation of the matrix diagonals and the length of the largest
//! spectral gap.
//!
//! Start with [`PeriodicJacobi`], then [`spectrum::band_structure`] for
//! `σ(J)` and [`bounds::full_verification`] for every inequality at once.
//! The `examples/` directory has one runnable program per capability.

pub mod bounds;
pub mod cli;
pub mod discriminant;
pub mod error;
pub mod model;
pub mod numerics;
pub mod quartic;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::{PeriodicJacobi, VariationReport};

use thiserror::Error;

/// Errors produced while building or analysing a periodic Jacobi matrix.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty entry sequences: a period needs at least one entry")]
    Empty,

    #[error("length mismatch: a has {a_len} entries, b has {b_len}")]
    LengthMismatch { a_len: usize, b_len: usize },

    #[error("a[{index}] = {value} is not strictly positive")]
    NonPositive { index: usize, value: f64 },

    #[error("{field}[{index}] = {value} is not finite")]
    NonFinite {
        field: &'static str,
        index: usize,
        value: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not symmetric: max asymmetry {asymmetry:e}")]
    NotSymmetric { asymmetry: f64 },

    #[error("matrix is not Hermitian: max deviation {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("Hermitian eigenvalue pairing failed at pair {pair}: {lo} vs {hi}")]
    PairingFailure { pair: usize, lo: f64, hi: f64 },

    #[error("numerical consistency check `{check}` failed: deviation {deviation:e} exceeds {tolerance:e}")]
    Consistency {
        check: &'static str,
        deviation: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by bad input rather than a numerical defect.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Empty
                | Error::LengthMismatch { .. }
                | Error::NonPositive { .. }
                | Error::NonFinite { .. }
                | Error::InvalidArgument(_)
        )
    }
}

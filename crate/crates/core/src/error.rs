use thiserror::Error;

/// Errors raised by the numerical core and the witness evaluators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("not a density operator: {0}")]
    NotDensity(String),

    #[error("normalization error: squared norm {norm_sq:.17e} differs from 1")]
    Normalization { norm_sq: f64 },

    #[error("truncation error: kept weight {kept_weight:.17e} is below 1 - {trunc_tol:e}")]
    Truncation { kept_weight: f64, trunc_tol: f64 },

    #[error("degenerate state: {0}")]
    Degenerate(String),

    #[error("truncation risk: monomial {monomial} needs more levels than cutoff {d_a}x{d_b} provides")]
    TruncationRisk {
        monomial: String,
        d_a: usize,
        d_b: usize,
    },

    #[error("operator is not Hermitian: {0}")]
    NonHermitianOperator(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("value expected to be real has imaginary part {imag:.3e}: {what}")]
    NotReal { what: String, imag: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by quaternion linear algebra, the completion solvers, and
/// the imaging / pipeline layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument is outside the operation's domain (negative threshold,
    /// zero matrix where a nonzero one is required, and so on).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A complex matrix handed to [`crate::qmat::QMatrix::from_complex_adjoint`]
    /// does not have the `[[A, B], [-conj(B), conj(A)]]` block layout.
    #[error("complex matrix violates the quaternion adjoint block structure: {0}")]
    BlockStructure(String),

    /// A matrix that must be Hermitian positive definite is not (the Cholesky
    /// factorization failed or the Hermitian check was violated).
    #[error("matrix is not Hermitian positive definite: {0}")]
    NotPositiveDefinite(String),

    /// A factorization was requested with fewer columns than the matrix rank.
    #[error("infeasible rank: {0}")]
    RankInfeasible(String),

    /// Solver configuration violates its invariants.
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    /// An ADMM iterate picked up non-finite values.
    #[error("solver diverged at iteration {iteration}: {message}")]
    Diverged { iteration: usize, message: String },

    /// File-system level failure while reading or writing artifacts.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    /// PNG decode/encode failure.
    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    /// JSON report serialization failure.
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    /// Manifest (de)serialization failure.
    #[error("manifest error: {0}")]
    Manifest(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

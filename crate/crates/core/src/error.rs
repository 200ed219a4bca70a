use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square and non-empty with finite entries: {0}")]
    InvalidMatrix(String),

    #[error("matrix is not Hermitian (asymmetry {asymmetry:e} exceeds {tolerance:e})")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e} below floor {floor:e})")]
    NotPsd { min_eigenvalue: f64, floor: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },

    #[error("spectral function has {got} values but the spectrum has {expected} clusters")]
    Alignment { expected: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ground set of size {0} exceeds the explicit subset table limit of 20")]
    Size(usize),

    #[error("invalid alpha weights: {0}")]
    InvalidAlpha(String),

    #[error("invalid monotone measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("eigenvalues of a are not dominated by those of b (index {index}: {a_value} > {b_value})")]
    NotDominated { index: usize, a_value: f64, b_value: f64 },

    #[error("eigenvalue {index} of b is degenerate while the matching eigenvalue of a is not")]
    DegenerateRatio { index: usize },

    #[error("alpha is not concave (Ky Fan weight {index} is {weight:e})")]
    NotConcave { index: usize, weight: f64 },

    #[error("{0}")]
    Range(String),

    #[error("2x2 block matrix is not positive (minimum eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("contraction extraction failed (norm {norm:e}, residual {residual:e})")]
    FactorizationFailed { norm: f64, residual: f64 },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

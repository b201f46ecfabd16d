use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cosine and sine coefficient sequences differ in length ({cos} vs {sin})")]
    LengthMismatch { cos: usize, sin: usize },
    #[error("sample count {0} must be even and at least 2")]
    InvalidGrid(usize),
    #[error("sample mean {mean:e} exceeds {limit:e}; the function must have zero mean")]
    NonZeroMean { mean: f64, limit: f64 },
    #[error("{coefficients} coefficients cannot be resolved from {samples} samples (need 2N < M)")]
    AliasError { coefficients: usize, samples: usize },
    #[error("nome {0} outside [0, 1)")]
    NomeOutOfRange(f64),
    #[error("tolerance {tol:e} is below the attainable accuracy {floor:e}")]
    TolTooSmall { tol: f64, floor: f64 },
    #[error("x must be positive, got {0}")]
    NonPositiveX(f64),
    #[error("depth must be positive, got {0}")]
    NonPositiveDepth(f64),
    #[error("argument {0} lies in 2πℤ where the kernel is singular")]
    SingularPoint(f64),
    #[error("{value} exceeds the limit {limit}")]
    TooLarge { value: u64, limit: u64 },
    #[error("{0} must be positive")]
    NonPositiveInteger(&'static str),
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("{what} did not converge: {detail}")]
    NoConvergence { what: &'static str, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

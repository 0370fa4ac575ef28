use thiserror::Error;

/// Failure modes across the crate, split roughly into input validation
/// (rejected before any computation) and numerical-contract violations
/// (conditions that are mathematically impossible on valid input and
/// therefore signal a corrupted computation).
#[derive(Error, Debug)]
pub enum Error {
    #[error("theta must be in [0, 1/4]")]
    InvalidTheta,
    #[error("invalid amplifier: {0}")]
    InvalidAmplifier(String),
    #[error("total degree {degree} exceeds the assembly guard {max}")]
    DegreeOverflow { degree: u32, max: u32 },
    #[error("invalid discriminant {0}: {1}")]
    InvalidDiscriminant(i64, String),
    #[error("requested tolerance {0:e} not reachable within the iteration cap")]
    ToleranceUnreachable(f64),
    #[error("prime cut {0} exceeds the sieve limit {1}")]
    SieveLimit(u64, u64),
    #[error("local factor sum did not converge at p={p}, r={r}")]
    NonConvergentLocalSum { p: u64, r: u32 },
    #[error("height must be at least 2 (got {0})")]
    InvalidHeight(f64),
    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix order {0} exceeds the supported maximum {1}")]
    MatrixTooLarge(usize, usize),
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("eigensolver failed to converge")]
    NoConvergence,
    #[error("eigen residual {residual:e} exceeds the contract bound {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },
    #[error("c1 quadratic form is not positive ({0:e}); computation corrupted")]
    NonPositiveC1(f64),
    #[error("sample count {0} is below the minimum {1}")]
    TooFewSamples(u64, u64),
    #[error("finite-difference step {0} outside [1e-3, 1e-1]")]
    InvalidStep(f64),
    #[error("grid needs at least {1} points (got {0})")]
    TooFewPoints(usize, usize),
    #[error("grid function must vanish at both endpoints")]
    EndpointNotZero,
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for usage/validation errors,
    /// 3 for numerical-contract violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidTheta
            | Error::InvalidAmplifier(_)
            | Error::DegreeOverflow { .. }
            | Error::InvalidDiscriminant(..)
            | Error::SieveLimit(..)
            | Error::InvalidHeight(_)
            | Error::InvalidInterval(..)
            | Error::MatrixTooLarge(..)
            | Error::TooFewSamples(..)
            | Error::InvalidStep(_)
            | Error::TooFewPoints(..)
            | Error::EndpointNotZero
            | Error::Usage(_)
            | Error::Io(_) => 2,
            Error::ToleranceUnreachable(_)
            | Error::NonConvergentLocalSum { .. }
            | Error::NotSymmetric
            | Error::NotPositiveDefinite
            | Error::NoConvergence
            | Error::ResidualTooLarge { .. }
            | Error::NonPositiveC1(_) => 3,
        }
    }
}

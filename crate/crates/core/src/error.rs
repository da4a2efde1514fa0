use thiserror::Error;

/// Errors raised by fallible operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter was outside the documented domain of the operation.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Legendre symbols are defined for odd prime moduli only.
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    /// Reduction, equivalence, genus and representability support positive
    /// definite primitive forms only.
    #[error("unsupported form ({a},{b},{c}): {reason}")]
    UnsupportedForm {
        a: i64,
        b: i64,
        c: i64,
        reason: &'static str,
    },
    /// Not a discriminant of a positive definite form: must be negative and
    /// ≡ 0 or 1 (mod 4).
    #[error("invalid discriminant {0}: must be negative and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),
    /// The computation would overflow a machine word or exceed a size guard.
    #[error("range error: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;

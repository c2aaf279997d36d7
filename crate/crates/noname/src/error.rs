//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by exact arithmetic, field construction, group closure
/// and the certificate builders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("base field mismatch: {0}")]
    BaseMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus is reducible: divisible by {factor}")]
    ReducibleModulus { factor: String },

    #[error("irreducibility of the modulus could not be verified by the bounded search; \
             pass trust_irreducible to proceed")]
    IrreducibilityUnverified,

    #[error("matrix is not a signed permutation matrix: {0}")]
    NotSignedPermutation(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("invalid Galois presentation: {0}")]
    PresentationInvalid(String),

    #[error("invalid group-to-Galois isomorphism: {0}")]
    IsoInvalid(String),

    #[error("alpha is not a normal element")]
    NotNormal,

    #[error("normal element search failed after {tries} tries")]
    SearchFailed { tries: u64 },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the computations in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} refused: size {size} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("generator {0} is singular over the declared field")]
    SingularGenerator(usize),

    #[error("group too large or infinite: closure exceeded {0} elements")]
    GroupTooLarge(usize),

    #[error(
        "characteristic {p} divides the group order {order}; averaging is unavailable, use the kernel method"
    )]
    ModularAveraging { p: u64, order: usize },

    #[error("the group over F_{0} has no integral lift; use the kernel method")]
    NoIntegralLift(u64),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("letter {letter} out of range for an alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("no length oracle for {0}")]
    UnsupportedLength(String),

    #[error("unsupported growth family: {0}")]
    UnsupportedGrowth(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("non-integral or negative multiplicity {0}")]
    BadMultiplicity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unsupported field order {0} (tables limited to q <= 256)")]
    UnsupportedOrder(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of GF({q})")]
    ElementOutOfRange { value: u64, q: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("monomial scale at position {0} is zero")]
    ZeroScale(usize),

    #[error("generator spans the zero code")]
    ZeroCode,
    #[error("parity-check matrix has rank 0 (code is the whole space)")]
    FullSpace,
    #[error("{what} needs {needed} steps, budget is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u64,
    },
    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("code set is invalid: {0}")]
    InvalidCodeSet(String),
    #[error("second code is not the q-repeated code of the first: {0}")]
    NotARepeat(String),
    #[error("generated subgroup has {orbits} coset orbits, expected {expected}; inconclusive")]
    Indeterminate { orbits: usize, expected: usize },
    #[error("generator {0} is not an automorphism of the code")]
    NotAnAutomorphism(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vector h must be nonzero")]
    ZeroVector,

    #[error("code is the whole space")]
    WholeSpace,
    #[error("minimum distance is not 1")]
    MinDistanceNotOne,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("certificate is not a classification")]
    NotClassified,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} exponents, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {left:?} vs {right:?}")]
    RingMismatch { left: Vec<String>, right: Vec<String> },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("power exponent must be at least 1")]
    ZeroPower,

    #[error("invalid variable map: {0}")]
    InvalidEmbedding(String),

    #[error("the zero ideal has no depth function")]
    ZeroIdeal,

    #[error("the unit ideal has no depth function")]
    UnitIdeal,

    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    #[error("lcm lattice exceeds the cap of {cap} elements")]
    LatticeCap { cap: usize },

    #[error("{gens} generators exceed the Taylor oracle cap of {cap}")]
    OracleCap { gens: usize, cap: usize },

    #[error("ring has {arity} variables; at most {max} are supported here")]
    TooManyVariables { arity: usize, max: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("negative exponent {value} in generator {row}")]
    NegativeExponent { row: usize, value: i64 },

    #[error("invalid depth spec at k={position}: {reason}")]
    InvalidSpec { position: usize, reason: String },

    #[error("sequence is not nonincreasing at k={position}")]
    NotNonincreasing { position: usize },

    #[error("inadmissible (n, d, r) = ({n}, {d}, {r}): {reason}")]
    Inadmissible { n: usize, d: usize, r: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certificate failed: {0}")]
    Certificate(String),

    #[error("internal model assertion failed: {0}")]
    Model(String),
}

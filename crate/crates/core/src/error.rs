use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("the empty partition has no corners")]
    EmptyPartition,
    #[error("rectangle {rows}x{cols} is empty")]
    EmptyRectangle { rows: usize, cols: usize },
    #[error("maxdeg of the zero functor is undefined")]
    ZeroFunctor,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("index error: {0}")]
    Index(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("no image given for variable {0}")]
    MissingImage(String),
    #[error("polynomial is not homogeneous of the requested degree")]
    NotHomogeneous,
    #[error("partition {partition} has more than {rows} rows")]
    TooFewRows { partition: String, rows: usize },
    #[error("graded multiplicities need a purely even space")]
    OddSpaceUnsupported,
    #[error("weight {0} occurs with multiplicity {1}")]
    NotMultiplicityFree(String, usize),
    #[error("the unit ideal has no minimal GL-primes")]
    UnitIdeal,
    #[error("ideal is not a GL-prime")]
    NotPrime,
    #[error("nilpotency exponent must be at least 1, got {0}")]
    BadExponent(u32),
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

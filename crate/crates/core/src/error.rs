use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2 < p < 2^31")]
    InvalidPrime(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("monomial arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("power exponent must be positive")]
    ZeroExponent,
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("saturation by the zero polynomial")]
    SaturateByZero,
    #[error("elimination count {k} out of range for {nvars} variables")]
    EliminationRange { k: usize, nvars: usize },
    #[error("the unit ideal has no multiplicity")]
    UnitIdeal,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("{0}")]
    Precondition(String),
    #[error("minor size {r} out of range for a {rows}x{cols} matrix")]
    MinorSize { r: usize, rows: usize, cols: usize },
    #[error("matrices are not composable: {0}")]
    NotComposable(String),
    #[error("ideal has no homogeneous elements of degree {0}")]
    NoElementsOfDegree(u32),
    #[error("no regular sequence found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("resolution exceeded the Hilbert syzygy bound of {0}")]
    ResolutionTooLong(usize),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

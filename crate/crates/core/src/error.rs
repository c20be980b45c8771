//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in the coefficient field")]
    DivisionByZero,

    #[error("monomial arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("basis was computed under a different monomial order")]
    OrderMismatch,

    #[error("free-module rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("grading error: {0}")]
    GradingError(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("finite-length certificate undecided within exponent bound {bound} (variable {var})")]
    UndecidedWithinBound { var: String, bound: u32 },

    #[error("free resolution truncated after {steps} steps; projective dimension is only a lower bound")]
    ResolutionTruncated { steps: usize },

    #[error("sequence does not stabilize within the data; raise nmax (length {len}, window {window})")]
    NotStabilized { len: usize, window: usize },

    #[error("Tor length at power n = {n} is not finite")]
    TorInfinite { n: u32 },

    #[error("no superficial element found after {retries} retries; last failure: {last_failure}")]
    NoSuperficialFound { retries: u32, last_failure: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("no module declared in instance file")]
    UndeclaredModule,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("denominator vanishes at t = 0; no power series expansion")]
    PoleAtZero,
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0} is not simply laced")]
    NotSimplyLaced(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

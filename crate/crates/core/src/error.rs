use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("partition syntax error: {0}")]
    Syntax(String),
    #[error("part {0} has a denominator other than 1 or 2")]
    BadDenominator(String),
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(String),
    #[error("operation requires an integer partition, got {0}")]
    HalfIntegerPartition(String),
    #[error("operation requires distinct parts, got {0}")]
    RepeatedParts(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has no definite parity")]
    IndefiniteParity,
    #[error("polynomials are not proportional")]
    NotProportional,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("argument {0} lies on a branch cut")]
    BranchCut(String),
    #[error("argument {0} lies outside the oscillatory region")]
    OutsideRegion(String),
    #[error("curve formula is singular at {0}")]
    Singular(String),
    #[error("root finder did not converge: max Newton correction {achieved} at {precision_bits} bits")]
    NoConvergence { achieved: String, precision_bits: u32 },
    #[error("root set violates symmetry: mismatch {0}")]
    SymmetryViolation(String),
    #[error("empty input: {0}")]
    Empty(String),
}

pub type Result<T> = std::result::Result<T, Error>;

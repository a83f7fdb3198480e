use thiserror::Error;

use crate::exactalg::Rational;

/// Errors raised by the exact-algebra kernel and the operator constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponents ({nu}, {mu}) are not nonnegative integers")]
    NonIntegerExponent { nu: Rational, mu: Rational },

    #[error("operator coefficient has a denominator with roots other than +1 and -1: {0}")]
    UnsupportedDenominator(String),

    #[error("division by the zero polynomial")]
    ZeroDenominator,

    #[error("weighted polynomials with exponents ({0}) and ({1}) differ by a non-integer")]
    IncommensurateExponents(String, String),

    #[error("lower parameter {0} hits a pole inside the truncated sum")]
    PoleInLowerParameter(Rational),

    #[error("hypergeometric sum does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("both point masses are positive (M = {m}, N = {n})")]
    BothMassesPositive { m: Rational, n: Rational },

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("internal cancellation failed: {0}")]
    InternalNoncancellation(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

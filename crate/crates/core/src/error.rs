use thiserror::Error;

use crate::rational::Rational;

/// Errors raised by the exact-arithmetic and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in fraction {0}/0")]
    ZeroDenominator(String),

    #[error("cannot parse {input:?} as {expected}")]
    Parse { input: String, expected: &'static str },

    #[error("{what} = {value} must lie in [0, 1]")]
    OutOfUnitInterval { what: &'static str, value: Rational },

    #[error("({theta}, {rho}) is not a critical point: den(rho) must divide den(theta)")]
    NotCritical { theta: Rational, rho: Rational },

    #[error("(i, j) = ({i}, {j}) are not affine parameters of a chain: j must lie in J(i)")]
    InvalidChain { i: i64, j: i64 },

    #[error("point ({theta}, {rho}) does not lie on chain L({i},{j})")]
    NotOnChain { i: i64, j: i64, theta: Rational, rho: Rational },

    #[error("pencil {quadrant} is not available at ({theta}, {rho})")]
    UnavailablePencil { quadrant: String, theta: Rational, rho: Rational },

    #[error("({theta}, {rho}) needs both neighbours, which requires rho not in {{0, 1}}")]
    MissingNeighbour { theta: Rational, rho: Rational },

    #[error("{0}")]
    Domain(String),

    #[error("integer {0} does not fit the 64-bit affine parameter range")]
    Overflow(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

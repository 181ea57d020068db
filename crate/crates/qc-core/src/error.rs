//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,

    #[error("cyclotomic index must be >= 1")]
    CyclotomicIndexZero,

    #[error("q-power factor (1 - q^0) is zero")]
    ZeroQPowerFactor,

    #[error("vanishing factor in Pochhammer product: {0}")]
    VanishingFactor(String),

    #[error("division by a zero value")]
    DivisionByZeroValue,

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("parametric atoms present; cyclotomic content is undetermined")]
    UndeterminedCycloContent,

    #[error("inadmissible parameter value: {0}")]
    InadmissibleParameter(String),

    #[error("missing parameter value for symbol {0}")]
    MissingParameter(char),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("moduli are not coprime")]
    NonCoprimeModuli,

    #[error("computation guard exceeded: {0}")]
    GuardExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by ring arithmetic, polynomial construction and the
/// identity machinery built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("element {0} is not invertible in this ring")]
    NotInvertible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {p}^{m} exceeds the supported bound 2^20")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("{0} is not an integer")]
    NotIntegral(String),
    #[error("cannot parse '{0}' as a ring element")]
    Parse(String),
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported matrix shape: dim {dim} with {len} entries")]
    BadShape { dim: usize, len: usize },
    #[error("degree {n} exceeds the polynomial construction cap {cap}")]
    DegreeTooLarge { n: u64, cap: u64 },
    #[error("series denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("kind offset k = {k} must be below the characteristic {p}")]
    KindOutOfRange { k: u64, p: u64 },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("Legendre symbol requires an odd prime modulus, got {0}")]
    InvalidLegendreModulus(u64),
    #[error("field of size {0} is too large for exhaustive enumeration")]
    EnumerationTooLarge(u64),
    #[error("parameter a must be nonzero")]
    ZeroParameter,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

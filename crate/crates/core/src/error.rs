use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor leading coefficient {0} is not +1 or -1")]
    NonUnitLeading(String),
    #[error("inflation factor must be at least 1")]
    ZeroInflation,
    #[error("sequence index must be at least 1 (got 0)")]
    ZeroIndex,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series constant term {0} is not +1 or -1")]
    NonUnitConstant(String),
    #[error("coefficient z^{needed} requested but series is truncated at order {order}")]
    InsufficientOrder { needed: usize, order: usize },
    #[error("p must be odd and positive (got {0})")]
    InvalidExponent(i64),
    #[error("malformed polynomial text {0:?}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

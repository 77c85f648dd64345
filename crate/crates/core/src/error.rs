use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid Gibbs context: {0}")]
    InvalidContext(String),

    #[error("states do not share a beta-ordering")]
    OrderingMismatch,

    #[error("dimension {d} exceeds the limit of {max} for {what}")]
    DimensionTooLarge { d: usize, max: usize, what: &'static str },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("construction inapplicable: {0}")]
    Inapplicable(String),

    #[error("zero-temperature Gibbs state: {0}")]
    ZeroTemperature(String),

    #[error("invalid qubit state: {0}")]
    InvalidQubit(String),

    #[error("invalid monotone: {0}")]
    InvalidMonotone(String),
}

impl Error {
    /// Stable machine-readable tag, used in CLI error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::InvalidDistribution(_) => "invalid-distribution",
            Error::ParseRational(_) => "parse-rational",
            Error::InvalidContext(_) => "invalid-context",
            Error::OrderingMismatch => "ordering-mismatch",
            Error::DimensionTooLarge { .. } => "dimension-too-large",
            Error::OutOfRange(_) => "out-of-range",
            Error::Inapplicable(_) => "inapplicable",
            Error::ZeroTemperature(_) => "zero-temperature",
            Error::InvalidQubit(_) => "invalid-qubit",
            Error::InvalidMonotone(_) => "invalid-monotone",
        }
    }
}

pub(crate) fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

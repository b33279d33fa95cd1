use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Out-of-range ids, missing or duplicate table entries, bad shapes.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Dimensions of linear data do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Input is well-formed but fails the axioms it is required to satisfy.
    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),

    #[error("search space bound {bound} exceeds limit {limit}")]
    SpaceTooLarge { bound: u128, limit: u128 },

    #[error("category is not thin")]
    NotThin,

    #[error("category is not a groupoid")]
    NotGroupoid,

    #[error("composition does not factorize through the given subcategories")]
    FactorizationFailed,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Malformed(msg.into()))
}

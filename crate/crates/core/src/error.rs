//! Crate-wide error type.

/// Errors produced by the library.
///
/// Every fallible operation returns [`Result`]. Callers that feed validated
/// input (e.g. the verification suites) can treat these as bugs; the CLI maps
/// them to usage errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An index pair or order is outside the documented domain of the operation.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// A vector does not satisfy the defining constraints of the requested
    /// partition set.
    #[error("invalid partition vector: {0}")]
    InvalidPartition(String),

    /// A requested value exists mathematically but has no exact image in the
    /// coefficient ring (e.g. a fractional power of a rational).
    #[error("not representable exactly: {0}")]
    NotRepresentable(String),

    /// Exact division had a nonzero remainder. The quotient is only defined
    /// when every term is divisible.
    #[error("exact division failed: {0}")]
    NotDivisible(String),

    /// Two series were compared component-wise but have different lengths.
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    /// A textual or JSON representation could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

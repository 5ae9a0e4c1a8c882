use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("attempt to invert zero")]
    DivisionByZero,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("enumeration bound exceeded: {what} = {size} > {bound}")]
    BoundExceeded { what: String, size: u128, bound: u128 },

    /// An internal consistency check failed (integrality, base-field
    /// membership, exact division). Always a bug, never bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Seifert invariants that do not describe a Seifert fibration.
    #[error("invalid Seifert invariants: {0}")]
    InvalidInvariants(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A self-check failed. Indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

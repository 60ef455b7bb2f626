use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs that violate an operation's preconditions.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// Malformed textual input (shapes, parameters, polynomials, sequences).
    #[error("parse error: {0}")]
    Parse(String),
    /// A request that exceeds a guard limit or needs a certification that is missing.
    #[error("refused: {0}")]
    Refused(String),
    /// The Schur coefficient matrix did not have full column rank.
    #[error("rank deficiency: {0}")]
    RankDeficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

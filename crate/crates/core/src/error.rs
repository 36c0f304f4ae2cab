use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter point lies on a singular locus.
    #[error("inadmissible parameter point: {0}")]
    Inadmissible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text input could not be parsed; `token` is the offending piece of input.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

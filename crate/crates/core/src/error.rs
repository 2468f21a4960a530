use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Input` covers malformed or out-of-range arguments supplied by a caller,
/// `Contract` covers a violated precondition of an operation (for example
/// asking for the ultrafilter frame of a table that is not a conditional
/// algebra), and `Parse` carries a position inside a text document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// True for errors caused by the caller's data rather than a failed law.
    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_) | Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

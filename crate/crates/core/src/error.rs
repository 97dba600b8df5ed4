use serde::Serialize;
use thiserror::Error;

/// Errors raised by the arithmetic, group and formula layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed or inconsistent input data (singular generator, residue where a
    /// non-residue is needed, ...).
    #[error("input error: {0}")]
    Input(String),
    /// The computation would exceed a configured size limit.
    #[error("resource error: {0}")]
    Resource(String),
    /// Text that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Input(_) => "input",
            Error::Resource(_) => "resource",
            Error::Parse(_) => "parse",
        }
    }

    /// The message without the kind prefix.
    pub fn message(&self) -> &str {
        match self {
            Error::Domain(m) | Error::Input(m) | Error::Resource(m) | Error::Parse(m) => m,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

/// Wire form of an [`Error`], as printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport {
            kind: e.kind(),
            message: e.message().to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

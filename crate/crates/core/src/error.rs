use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller-supplied parameter is outside the supported range.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// The input is well formed but the operation is undefined for it.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested case is outside what the crate implements.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Text input could not be parsed.
    #[error("parse error{}: {msg}", .line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },
    /// Data failed validation (catalog, character tables, tables on disk).
    #[error("validation failed: {0}")]
    Validation(String),
    /// A configurable resource cap was hit.
    #[error("resource cap exceeded: {what} (cap {cap})")]
    Resource { what: String, cap: u64 },
    /// Two independent computations disagree.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse { line: None, msg: msg.into() }
    }

    pub(crate) fn resource(what: impl Into<String>, cap: u64) -> Self {
        Error::Resource { what: what.into(), cap }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

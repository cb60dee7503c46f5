use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The sequence breaks a restricted-growth rule at the given 1-based position.
    #[error("not a restricted growth function: first violation at position {position}")]
    NotAnRgf { position: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{id} is out of regime at n={n}, k={}", fmt_k(.k))]
    OutOfRegime {
        id: String,
        n: usize,
        k: Option<usize>,
    },

    #[error("the zero polynomial has no degree or leading coefficient")]
    ZeroPolynomial,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("i/o error: {0}")]
    Io(String),
}

fn fmt_k(k: &Option<usize>) -> String {
    match k {
        Some(k) => k.to_string(),
        None => "*".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn parse_err(token: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        reason: reason.into(),
    }
}

use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit codes: [`Error::InvalidInput`] and
/// [`Error::NotInSpan`] are caller mistakes, [`Error::BoundExceeded`] is a
/// size guard, [`Error::Internal`] means two computation routes disagreed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("element is not in the requested span (residual: {residual})")]
    NotInSpan { residual: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
        if value > bound {
            Err(Error::BoundExceeded { what, value, bound })
        } else {
            Ok(())
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

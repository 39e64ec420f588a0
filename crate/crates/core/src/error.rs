use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad dimensions, unknown label, zero vector, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured size guard would be exceeded.
    #[error("refused: {what} is {actual}, limit is {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error(transparent)]
    Parse(#[from] crate::format::ParseError),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::Guard {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

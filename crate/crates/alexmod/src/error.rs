use thiserror::Error;

/// Errors raised by the library.
///
/// `Input` covers malformed or rejected user data; `Internal` marks a
/// violation of an invariant the theory guarantees, which should never
/// happen on valid input and is reported separately by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("exponent overflow in Laurent polynomial arithmetic")]
    ExponentOverflow,
    #[error("{0}")]
    Input(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Exit code the CLI maps this error to (1 = input, 2 = internal).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 2,
            _ => 1,
        }
    }
}

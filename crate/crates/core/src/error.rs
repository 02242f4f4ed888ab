use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rewrite step budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("Sq{a} Sq{b} is not an Adem pair (need 1 <= a < 2b)")]
    NotAdemPair { a: u32, b: u32 },

    #[error("parse error at column {}: {message}", .position + 1)]
    Parse { position: usize, message: String },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("variable index {0} already occurs in the polynomial")]
    VariableNotFresh(usize),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("unknown module `{0}`")]
    UnknownModule(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

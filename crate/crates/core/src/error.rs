use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("matrix is not in GL1(2, K[t]): {0}")]
    NotInGl1(String),

    #[error("top coefficient does not have rank one at degree {degree}")]
    InternalRank { degree: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("zero vector has no projective point")]
    ZeroVector,

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("work bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("word is not in normal form: {0}")]
    NotNormalized(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("concept class is empty")]
    EmptyClass,

    #[error("duplicate concept {0}")]
    DuplicateConcept(String),

    #[error("objects are defined over different universes")]
    UniverseMismatch,

    #[error("concept class is not contained in the hypothesis class")]
    NotSubclass,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    TooLarge(String),

    #[error("teacher became incoherent: {0}")]
    Incoherent(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::cyclo::CycloError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inadmissible triple ({0}, {1}, {2})")]
    Inadmissible(u32, u32, u32),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("conventions unresolvable: {0}")]
    Conventions(String),
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;

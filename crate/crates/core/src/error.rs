use thiserror::Error;

use crate::syntax::PropName;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid trace on line {line}: {msg}")]
    Trace { line: usize, msg: String },

    #[error("formula is not propositional: {0}")]
    NotPropositional(String),

    #[error("formula is not in positive normal form: {0}")]
    NotPnf(String),

    #[error("formula is not guarded: {0}")]
    Unguarded(String),

    #[error("atom `{0}` is not in the alphabet")]
    AlphabetMismatch(PropName),

    #[error("alphabet has {size} atoms, at most {max} supported here")]
    AlphabetTooLarge { size: usize, max: usize },

    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),

    #[error("malformed automaton: {0}")]
    Import(String),

    #[error("construction exceeded its time budget")]
    Timeout,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

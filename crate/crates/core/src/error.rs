use thiserror::Error;

use crate::symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol {0:?}: expected [a-z]+(_[0-9]+)*")]
    InvalidSymbol(String),

    #[error("symbol {0} is not in the alphabet")]
    UnknownSymbol(Symbol),

    #[error("invalid automaton: {}", .0.join("; "))]
    InvalidAutomaton(Vec<String>),

    #[error("automaton accepts an infinite language")]
    InfiniteLanguage,

    #[error("state {0} is not accessible from the initial state")]
    Inaccessible(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

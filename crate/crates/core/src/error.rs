use thiserror::Error;

use crate::perm::Unsolvable;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid contains no tokens")]
    EmptyGrid,
    #[error("illegal character {ch:?} at line {line}, column {column}")]
    IllegalChar { line: usize, column: usize, ch: char },
    #[error("two tokens placed at ({x}, {y})")]
    Collision { x: i64, y: i64 },
    #[error("illegal move character {ch:?} at offset {offset}")]
    BadMove { ch: char, offset: usize },
    #[error("configuration is not compact")]
    NotCompact,
    #[error("configuration is not canonical")]
    NotCanonical,
    #[error("push sequence does not return to the starting shape")]
    ShapeChanged,
    #[error("configurations do not have the same shape")]
    ShapeMismatch,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("configuration is not sparse")]
    NotSparse,
    #[error("box needs {expected} tokens, configuration has {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unsolvable: {0}")]
    Unsolvable(Unsolvable),
    #[error("budget exceeded after {states} states")]
    BudgetExceeded { states: usize },
    #[error("puzzle file line {line}: {message}")]
    PuzzleFormat { line: usize, message: String },
    #[error("internal verification failed: {0}")]
    Verification(String),
}

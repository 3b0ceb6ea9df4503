use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("entry {value} at cell ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("operation is not commutative: {0}*{1} != {1}*{0}")]
    NotCommutative(usize, usize),

    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),

    #[error("idempotent {0} is not central")]
    NonCentralIdempotent(usize),

    #[error("subset is not an ideal: {0}*{1} = {2} leaves it")]
    NotAnIdeal(usize, usize, usize),

    #[error("partition is not a congruence: {x} ~ {y} but {a}*{x} !~ {a}*{y} (or on the right)")]
    NotACongruence { x: usize, y: usize, a: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

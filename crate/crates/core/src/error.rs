use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group mismatch between operands")]
    GroupMismatch,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("negative coefficient at entry ({row},{col}): {detail}")]
    NegativeCoefficient {
        row: usize,
        col: usize,
        detail: String,
    },

    #[error("det not well defined: group is not abelian")]
    NonAbelian,

    #[error("matrix is reducible: {0}")]
    Reducible(String),

    #[error("matrix is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("not G-primitive: {0}")]
    NotGPrimitive(String),

    #[error("NZC violation: {0}")]
    Nzc(String),

    #[error("move rejected: {0}")]
    MoveRejected(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("certificate format: {0}")]
    Certificate(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("label {0} does not exist in context (m={1}, n={2}, k={3})")]
    BadLabel(String, u32, u32, u32),
    #[error("flat index {index} outside universe 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NonSquareMatrix {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder term {0} is not a multiple of the divisor's leading term")]
    NotDivisible(String),
    #[error("bad exponent sequence: {0}")]
    BadAlpha(String),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("chain violated at flat position {position}: {left} < {right}")]
    ChainViolation {
        position: usize,
        left: u32,
        right: u32,
    },
    #[error("sequence has length {got}, expected at most {expected}")]
    TooManyParts { got: usize, expected: usize },
    #[error("cannot unshift: {0}")]
    UnshiftError(String),
    #[error("universe of {size} variables exceeds the factorial bound {bound}")]
    UniverseTooLarge { size: usize, bound: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("contexts do not form a projection chain: {0}")]
    ChainShapeMismatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

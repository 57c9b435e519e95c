use thiserror::Error;

/// Everything that can go wrong inside the decomposition engines and the
/// file formats around them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("coordinate {index} is zero; component exponents must be at least 1")]
    ZeroCoordinate { index: usize },

    #[error("coordinate index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("generator exponent {value} is not a finite exponent <= 2^32")]
    BadExponent { value: String },

    #[error("expected a bivariate ideal, got {0} variables")]
    NotBivariate(usize),

    #[error("staircase box has {cells} cells, over the budget of {budget}")]
    BudgetExceeded { cells: u128, budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

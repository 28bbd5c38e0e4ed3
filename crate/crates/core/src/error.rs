use thiserror::Error;

/// Errors raised by the core library. Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {} out of range for dimension {dim}", .index + 1)]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("scalar {value} is not valid in {field}")]
    InvalidScalar { value: String, field: String },

    #[error("scalars from different fields ({left} and {right})")]
    FieldMismatch { left: String, right: String },

    #[error("generation index must be at least 1")]
    ZeroGeneration,

    #[error("index {} is not cyclic", .index + 1)]
    NotCyclic { index: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("algebra is degenerate (some basis element squares to zero)")]
    Degenerate,

    #[error("empty part list")]
    EmptyParts,

    #[error("brute-force enumeration requires a prime field")]
    RequiresPrimeField,

    #[error("enumeration needs {needed} vectors, budget allows {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

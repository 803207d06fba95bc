use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix must be square (got {rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is indefinite (pivot {pivot})")]
    Indefinite { pivot: usize },

    #[error("quadratic part is not positive definite on the lattice span")]
    NotPositiveDefinite,

    #[error("point is not in the lattice")]
    NotInLattice,

    #[error("entries do not take two consecutive values after removing the j/n part")]
    NotTwoValued,

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("forms are not proportional")]
    NotProportional,

    #[error("supporting line is degenerate: {0}")]
    DegenerateLine(String),

    #[error("vertices are not equidistant under the form")]
    NotEquidistant,

    #[error("enumeration exceeded node budget of {0}")]
    BudgetExceeded(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

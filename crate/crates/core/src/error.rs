use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {n} variables")]
    VariableIndexOutOfRange { index: usize, n: usize },

    #[error("point has {got} coordinates, polynomial has {expected} variables")]
    PointLengthMismatch { expected: usize, got: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} is not homogeneous")]
    NotHomogeneous { what: String },

    #[error("expected homogeneous degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: String },

    #[error("degree {0} is out of range for this operation")]
    DegreeOutOfRange(u32),

    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("direction is not isotropic (sum of squares is {0})")]
    NotIsotropic(String),

    #[error("directions {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("invalid family specification: {0}")]
    InvalidFamily(String),

    #[error("zero vector is not a valid witness")]
    ZeroWitness,

    #[error("polynomial is not Hessian nilpotent")]
    NotHessianNilpotent,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("search cap {cap} exhausted: {detail}")]
    SearchCapExhausted { cap: usize, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inexact polynomial division")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use rootjones_core::{JonesError, LinkError, VogelError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QsimError {
    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("register {0} does not exist")]
    NoSuchRegister(usize),
    #[error("register {0} is used twice by one gate")]
    RepeatedRegister(usize),
    #[error("control register {register} has dimension {dim}, expected 2")]
    BadControl { register: usize, dim: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    BasisOutOfRange { index: usize, dim: usize },
    #[error("dimension {0} is not a power of two")]
    NotQubits(usize),
    #[error("generator {generator} out of range for {strands} strands")]
    BadGenerator { generator: usize, strands: usize },
    #[error("epsilon must be positive, got {0}")]
    BadEpsilon(f64),
    #[error("state is not a valid density matrix: {0}")]
    BadDensity(String),
    #[error("malformed circuit document: {0}")]
    Json(String),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Vogel(#[from] VogelError),
}

use thiserror::Error;

/// Errors raised by the geometry engine and the model loader.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular (determinant is zero)")]
    SingularMatrix,

    #[error("plane is degenerate: g(X,X)g(Y,Y) - g(X,Y)^2 = 0")]
    DegeneratePlane,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("valence mismatch: expected {expected}, found {found}")]
    ValenceMismatch { expected: String, found: String },

    #[error("almost paracontact structures need odd dimension, got {0}")]
    EvenDimension(usize),

    #[error("structure is not quasi-para-Sasakian")]
    NotQuasiParaSasakian,

    #[error("no non-null direction in the paracontact distribution")]
    NoNonNullHorizontalDirection,

    #[error("no non-null horizontal direction X with g(X,X) != 0")]
    DegenerateDirection,

    #[error("dimension {0} is too small (need at least 4)")]
    DimensionTooSmall(usize),

    #[error("operation requires dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error("unknown identity or flag `{0}`")]
    UnknownIdentity(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("duplicate structure constant entry for [E{i}, E{j}] component E{k}")]
    DuplicateEntry { i: usize, j: usize, k: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

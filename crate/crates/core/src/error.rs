use thiserror::Error;

/// Structural errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate lists differ ({left} vs {right} coordinates)")]
    CoordinateMismatch { left: usize, right: usize },

    #[error("operands live over different signatures")]
    SignatureMismatch,

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("grade {grade} exceeds generator count {n}")]
    InvalidGrade { grade: usize, n: usize },

    #[error("invalid axis {0}; expected 1, 2 or 3")]
    InvalidAxis(usize),

    #[error("invalid plane ({0}, {1})")]
    InvalidPlane(usize, usize),

    #[error("space has no spatial (x, y, z) block")]
    NoSpatialBlock,

    #[error("space has no time coordinate")]
    NoTimeCoordinate,

    #[error("expected {expected} vector field components, got {found}")]
    ComponentCount { expected: usize, found: usize },

    #[error("not idempotent: {0}")]
    NotIdempotent(String),

    #[error("family of idempotents is empty")]
    EmptyFamily,

    #[error("family does not sum to one")]
    IncompleteFamily,

    #[error("not an involution: {0}")]
    NotInvolution(String),

    #[error("element is not mirror symmetric")]
    NonMirror,

    #[error("element is not invertible")]
    Singular,

    #[error("expected a unit vector: {0}")]
    NotUnitVector(String),

    #[error("square is not {expected}: {detail}")]
    BadSquare { expected: i8, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

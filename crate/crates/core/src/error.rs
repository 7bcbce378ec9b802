use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is singular (pivot {pivot:.3e} at column {column})")]
    SingularMatrix { column: usize, pivot: f64 },

    #[error("group order must be at least {min}, got {order}")]
    InvalidOrder { order: usize, min: usize },

    #[error("matrix is not an isometry")]
    NotIsometry,

    #[error("implicit figure needs at least one sample point")]
    NoSamples,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree error at position {position}: {message}")]
    Degree { position: usize, message: String },

    #[error("equation has no second-degree terms")]
    NotQuadratic,

    #[error("cross terms (xy, xz, yz) are not supported for quadric classification")]
    CrossTermsUnsupported,

    #[error("malformed model file at line {line}, column {column}: {message}")]
    ModelFormat { line: usize, column: usize, message: String },

    #[error("invalid model: {0}")]
    Model(String),

    #[error("structure is a mechanism: reduced stiffness matrix is singular")]
    Mechanism,

    #[error("merged node {node} carries contradictory support conditions")]
    MergeConflict { node: String },
}

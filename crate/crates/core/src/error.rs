//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by the geometric and arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live in the same ambient dimension do not.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The ambient dimension exceeds the supported cap.
    #[error("ambient dimension {0} exceeds the supported maximum of 4")]
    DimensionTooLarge(usize),

    /// An operation that needs at least one point received none.
    #[error("empty input")]
    EmptyInput,

    /// The zero vector has no primitive form.
    #[error("zero vector has no primitive form")]
    ZeroVector,

    /// A matrix expected to be square is not.
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// A matrix expected to be invertible is singular.
    #[error("matrix is singular")]
    SingularMatrix,

    /// A linear map expected to be unimodular has |det| != 1.
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    /// A full-dimensional polytope was required.
    #[error("polytope is not full-dimensional (intrinsic dimension {intrinsic}, ambient {ambient})")]
    NotFullDimensional { intrinsic: usize, ambient: usize },

    /// An H-representation describes an unbounded polyhedron.
    #[error("unbounded-polyhedron: the inequality system has an unbounded feasible set")]
    UnboundedPolyhedron,

    /// An H-representation describes the empty set.
    #[error("empty polyhedron: the inequality system is infeasible")]
    EmptyPolyhedron,

    /// A lattice scale (the s of sZ^d) must be a positive integer.
    #[error("invalid lattice scale: {0}")]
    InvalidScale(String),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Input violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested catalog id does not exist.
    #[error("unknown catalog id: {0}")]
    UnknownCatalogId(String),

    /// A combination of arguments the implementation deliberately does not
    /// cover (documented on the operation that raises it).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

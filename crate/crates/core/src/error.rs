use num_bigint::BigInt;
use thiserror::Error;

use crate::fan::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("vectors do not form a lattice basis (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("cone needs at least one generator")]
    NoGenerators,
    #[error("point set spans an affine subspace of dimension {affine_dim} in ambient dimension {ambient}")]
    LowerDimensional { affine_dim: usize, ambient: usize },
    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("polytope is not simplicial")]
    NotSimplicial,
    #[error("polytope is not smooth Fano")]
    NotSmoothFano,
    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),
    #[error("polytope lives in the {found} lattice, operation expects the {expected} lattice")]
    WrongSide { expected: &'static str, found: &'static str },
    #[error("invalid fan: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFan(Vec<Violation>),
    #[error("maximal cone {cone} is not full-dimensional")]
    NotFullDimensional { cone: usize },
    #[error("fan is not complete")]
    NotComplete,
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("ray index {index} out of range ({count} rays)")]
    RayIndex { index: usize, count: usize },
    #[error("root region of ray {ray} is unbounded; fan is not complete")]
    UnboundedRoots { ray: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown input format: {0}")]
    UnknownFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Malformed input as opposed to a violated mathematical precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UnknownFormat(_) | Error::Io(_) | Error::Json(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Lattice polytopes: facet presentation, face lattice and the partition of
//! lattice points of a dilate by relative interiors of faces.

mod hull;
mod lattice;
mod linalg;
mod points;

pub use hull::{Facet, LatticePolytope, PolytopeFile, MAX_DIM};
pub use lattice::{Face, FaceId, FaceLattice, FaceLatticeExport};
pub use points::{points_by_face, PointsByFace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("no points given")]
    Empty,
    #[error("ambient dimension {0} is outside 1..={MAX_DIM}")]
    UnsupportedDimension(usize),
    #[error("point of length {got} in a {expected}-dimensional input")]
    InconsistentDimension { expected: usize, got: usize },
    #[error("points span a {dim}-dimensional affine space, need {n}")]
    NotFullDimensional { n: usize, dim: i32 },
    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(i64),
    #[error("face lattice export does not match the lattice rebuilt from its vertices")]
    ExportMismatch,
    #[error("no face with id {0}")]
    UnknownFace(usize),
}

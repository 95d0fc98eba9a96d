//! Equilateral rectilinear lattice polygons: every side has unit length and
//! every interior angle is 90° or 270°.
//!
//! A polygon is described by its turn word, read counterclockwise, where `L`
//! is a convex (90°) corner and `R` a reflex (270°) corner. Realising the
//! word from a start direction gives the step word (`E`/`N`/`W`/`S`) and the
//! lattice vertices.

mod canonical;
mod enumerate;
mod polygon;
mod symmetry;
mod word;

pub use canonical::{canonical, canonical_chiral, CanonicalForm};
pub use enumerate::{enumerate, enumerate_census, FamilyCensus};
pub use polygon::{
    bounds_of, general_right_angle_count, validate, Cell, Point, Polygon, PolygonExport,
};
pub use symmetry::{normalize_cells, oriented_cells, Isometry, SymmetryGroup, SymmetryLabel};
pub use word::{steps_from_turns, Dir, StepWord, Turn, TurnWord};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid character {found:?} at position {position} (expected one of {expected})")]
    Parse {
        found: char,
        position: usize,
        expected: &'static str,
    },
    #[error("walk does not close")]
    NotClosed,
    #[error("walk revisits a vertex at step {index}")]
    SelfIntersection { index: usize },
    #[error("polygon has zero area")]
    Degenerate,
    #[error("steps {index} and {next} are not perpendicular")]
    NotPerpendicular { index: usize, next: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

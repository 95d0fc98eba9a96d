//! Exhaustive engines for two small spatial problems: the no-adjacent
//! counter placement game on a line, and the family of equilateral
//! rectilinear polygons whose corners are all 90° or 270°.
//!
//! The crate is organised by engine:
//!
//! * [`game`] solves the placement game (winners, Grundy values, optimal
//!   play, strategy verification, periodicity of the Grundy sequence).
//! * [`poly`] validates, canonicalises and enumerates the polygons and
//!   reports their geometric properties.
//! * [`tiling`] produces and checks plane-tiling certificates.
//! * [`claims`] evaluates a registry of assertions against the engines.
//! * [`render`] draws SVG figures of boards, polygons and tilings.
//!
//! With the default `parallel` feature the search loops run on rayon; without
//! it every engine runs sequentially and produces identical output.

pub mod claims;
pub mod exec;
pub mod game;
pub mod poly;
pub mod render;
pub mod tiling;

pub use game::{BoardPosition, GameError, GrundyMethod, GrundyTable, Player, Seat};
pub use poly::{Dir, PolyError, Polygon, StepWord, Turn, TurnWord};
pub use tiling::{TilingCertificate, TilingError};

use std::fmt;

use serde::{Deserialize, Serialize};

use super::polygon::{Cell, Point};
use super::word::{Dir, StepWord};

/// One of the eight symmetries of the square lattice.
///
/// Indices `0..4` rotate counterclockwise by `90° * k`; indices `4..8` first
/// mirror in the x-axis and then rotate by `90° * (k - 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Isometry(u8);

impl Isometry {
    pub const IDENTITY: Isometry = Isometry(0);

    pub fn all() -> impl Iterator<Item = Isometry> {
        (0..8).map(Isometry)
    }

    pub fn new(index: u8) -> Option<Isometry> {
        (index < 8).then_some(Isometry(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_reflection(self) -> bool {
        self.0 >= 4
    }

    pub fn rotation_steps(self) -> u8 {
        self.0 % 4
    }

    pub fn apply(self, (x, y): Point) -> Point {
        let (mut x, mut y) = if self.is_reflection() {
            (x, -y)
        } else {
            (x, y)
        };
        for _ in 0..self.rotation_steps() {
            (x, y) = (-y, x);
        }
        (x, y)
    }

    pub fn apply_dir(self, d: Dir) -> Dir {
        let image = self.apply(d.delta());
        Dir::ALL
            .into_iter()
            .find(|c| c.delta() == image)
            .expect("isometries preserve unit steps")
    }

    pub fn apply_steps(self, steps: &StepWord) -> StepWord {
        StepWord::new(steps.steps().iter().map(|&d| self.apply_dir(d)).collect())
    }

    /// Image of a unit cell, again named by its lower-left corner.
    pub fn apply_cell(self, (x, y): Cell) -> Cell {
        let (cx, cy) = self.apply((2 * x + 1, 2 * y + 1));
        ((cx - 1).div_euclid(2), (cy - 1).div_euclid(2))
    }
}

/// Translates cells so the minimum x and y are zero, then sorts them.
pub fn normalize_cells(cells: &mut [Cell]) {
    let min_x = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let min_y = cells.iter().map(|c| c.1).min().unwrap_or(0);
    for c in cells.iter_mut() {
        *c = (c.0 - min_x, c.1 - min_y);
    }
    cells.sort_unstable();
}

/// Image of a cell set under `iso`, translated to the origin.
pub fn oriented_cells(cells: &[Cell], iso: Isometry) -> Vec<Cell> {
    let mut out: Vec<Cell> = cells.iter().map(|&c| iso.apply_cell(c)).collect();
    normalize_cells(&mut out);
    out
}

/// Subgroups of the symmetry group of the square, up to conjugacy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryLabel {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "mirror-1")]
    Mirror,
    #[serde(rename = "rotation-2")]
    Rotation2,
    #[serde(rename = "rotation-2+mirrors")]
    Rotation2Mirrors,
    #[serde(rename = "rotation-4")]
    Rotation4,
    #[serde(rename = "full-8")]
    Full,
}

impl SymmetryLabel {
    pub fn order(self) -> usize {
        match self {
            SymmetryLabel::Trivial => 1,
            SymmetryLabel::Mirror | SymmetryLabel::Rotation2 => 2,
            SymmetryLabel::Rotation2Mirrors | SymmetryLabel::Rotation4 => 4,
            SymmetryLabel::Full => 8,
        }
    }
}

impl fmt::Display for SymmetryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryLabel::Trivial => "trivial",
            SymmetryLabel::Mirror => "mirror-1",
            SymmetryLabel::Rotation2 => "rotation-2",
            SymmetryLabel::Rotation2Mirrors => "rotation-2+mirrors",
            SymmetryLabel::Rotation4 => "rotation-4",
            SymmetryLabel::Full => "full-8",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryGroup {
    pub label: SymmetryLabel,
    /// Isometries mapping the shape onto a translate of itself, ascending.
    pub isometries: Vec<Isometry>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.isometries.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.label == SymmetryLabel::Trivial
    }
}

/// Symmetries of a cell set (the interior of a polygon).
pub(crate) fn symmetry_group(cells: &[Cell]) -> SymmetryGroup {
    let base = oriented_cells(cells, Isometry::IDENTITY);
    let isometries: Vec<Isometry> = Isometry::all()
        .filter(|&iso| oriented_cells(cells, iso) == base)
        .collect();
    let has = |i: u8| isometries.iter().any(|iso| iso.index() == i);
    let label = match isometries.len() {
        1 => SymmetryLabel::Trivial,
        2 if has(2) => SymmetryLabel::Rotation2,
        2 => SymmetryLabel::Mirror,
        4 if has(1) => SymmetryLabel::Rotation4,
        4 => SymmetryLabel::Rotation2Mirrors,
        8 => SymmetryLabel::Full,
        other => {
            unreachable!("stabiliser of order {other} is not a subgroup of order 1, 2, 4 or 8")
        }
    };
    SymmetryGroup { label, isometries }
}

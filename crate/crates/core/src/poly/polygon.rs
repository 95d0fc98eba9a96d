use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::symmetry::{self, SymmetryGroup};
use super::word::{steps_from_turns, Dir, StepWord, Turn, TurnWord};
use super::PolyError;

/// Lattice point.
pub type Point = (i32, i32);

/// Unit cell named by its lower-left corner.
pub type Cell = (i32, i32);

/// A validated polygon, stored counterclockwise with its first step east and
/// its first vertex at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    turns: TurnWord,
    steps: StepWord,
    vertices: Vec<Point>,
}

/// Realises `turns` from the origin heading east and checks that it bounds a
/// simple polygon. Clockwise words are re-oriented.
///
/// Unit axis-parallel edges can only meet at lattice points, so distinct
/// vertices are enough for simplicity. A simple closed curve has no holes.
pub fn validate(turns: &TurnWord) -> Result<Polygon, PolyError> {
    let steps = steps_from_turns(turns, Dir::E);
    let n = steps.len();
    if n == 0 {
        return Err(PolyError::NotClosed);
    }
    let last = steps.steps()[n - 1];
    if steps.displacement() != (0, 0) || last.turn(turns.letters()[n - 1]) != Dir::E {
        return Err(PolyError::NotClosed);
    }
    let vertices = steps.trace((0, 0));
    check_distinct(&vertices)?;
    let twice_area = shoelace2(&vertices);
    if twice_area == 0 {
        return Err(PolyError::Degenerate);
    }
    if twice_area < 0 {
        return validate(&turns.reverse_complement());
    }
    Ok(Polygon {
        turns: turns.clone(),
        steps,
        vertices,
    })
}

fn check_distinct(vertices: &[Point]) -> Result<(), PolyError> {
    let mut seen = HashSet::with_capacity(vertices.len());
    for (index, v) in vertices.iter().enumerate() {
        if !seen.insert(*v) {
            return Err(PolyError::SelfIntersection { index });
        }
    }
    Ok(())
}

/// Twice the signed area.
fn shoelace2(vertices: &[Point]) -> i64 {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let (x1, y1) = vertices[i];
            let (x2, y2) = vertices[(i + 1) % n];
            i64::from(x1) * i64::from(y2) - i64::from(x2) * i64::from(y1)
        })
        .sum()
}

impl Polygon {
    pub fn turns(&self) -> &TurnWord {
        &self.turns
    }

    pub fn steps(&self) -> &StepWord {
        &self.steps
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn sides(&self) -> usize {
        self.turns.len()
    }

    pub fn area(&self) -> u64 {
        (shoelace2(&self.vertices) / 2) as u64
    }

    /// `(convex, reflex)`, i.e. the number of 90° and 270° corners.
    pub fn right_angle_count(&self) -> (usize, usize) {
        (self.turns.count(Turn::L), self.turns.count(Turn::R))
    }

    pub fn is_convex(&self) -> bool {
        self.turns.count(Turn::R) == 0
    }

    /// Corners strictly alternate between convex and reflex.
    pub fn is_alternating(&self) -> bool {
        let t = self.turns.letters();
        let n = t.len();
        (0..n).all(|k| t[k] != t[(k + 1) % n])
    }

    pub fn symmetry_group(&self) -> SymmetryGroup {
        symmetry::symmetry_group(&self.rasterize())
    }

    /// Interior unit cells by scanline parity: a cell is inside when an odd
    /// number of vertical edges cross its row to its right. Sorted by `(x, y)`.
    pub fn rasterize(&self) -> Vec<Cell> {
        let n = self.vertices.len();
        let mut crossings: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for i in 0..n {
            let (x1, y1) = self.vertices[i];
            let (x2, y2) = self.vertices[(i + 1) % n];
            if x1 == x2 {
                crossings.entry(y1.min(y2)).or_default().push(x1);
            }
        }
        let mut cells = Vec::new();
        for (y, xs) in crossings.iter_mut() {
            xs.sort_unstable();
            for pair in xs.chunks(2) {
                if let [from, to] = *pair {
                    cells.extend((from..to).map(|x| (x, *y)));
                }
            }
        }
        cells.sort_unstable();
        cells
    }

    /// Bounding box `(min, max)` of the vertices.
    pub fn bounds(&self) -> (Point, Point) {
        bounds_of(&self.vertices)
    }

    pub fn export(&self) -> PolygonExport {
        let (convex_corners, reflex_corners) = self.right_angle_count();
        PolygonExport {
            turns: self.turns.to_string(),
            vertices: self.vertices.clone(),
            area: self.area(),
            convex_corners,
            reflex_corners,
            symmetry: self.symmetry_group().label.to_string(),
        }
    }
}

pub fn bounds_of(points: &[Point]) -> (Point, Point) {
    let min_x = points.iter().map(|p| p.0).min().unwrap_or(0);
    let min_y = points.iter().map(|p| p.1).min().unwrap_or(0);
    let max_x = points.iter().map(|p| p.0).max().unwrap_or(0);
    let max_y = points.iter().map(|p| p.1).max().unwrap_or(0);
    ((min_x, min_y), (max_x, max_y))
}

/// JSON export of a polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonExport {
    pub turns: String,
    pub vertices: Vec<Point>,
    pub area: u64,
    pub convex_corners: usize,
    pub reflex_corners: usize,
    pub symmetry: String,
}

/// `(count_90, count_270)` for a closed simple rectilinear walk that may
/// contain straight vertices (equal consecutive steps), which are skipped.
pub fn general_right_angle_count(steps: &StepWord) -> Result<(usize, usize), PolyError> {
    let s = steps.steps();
    let n = s.len();
    if n == 0 || steps.displacement() != (0, 0) {
        return Err(PolyError::NotClosed);
    }
    let vertices = steps.trace((0, 0));
    check_distinct(&vertices)?;
    let twice_area = shoelace2(&vertices);
    if twice_area == 0 {
        return Err(PolyError::Degenerate);
    }
    let (mut left, mut right) = (0, 0);
    for k in 0..n {
        match s[k].turn_to(s[(k + 1) % n]) {
            Some(Turn::L) => left += 1,
            Some(Turn::R) => right += 1,
            None => {}
        }
    }
    Ok(if twice_area > 0 {
        (left, right)
    } else {
        (right, left)
    })
}

use serde::{Deserialize, Serialize};

use super::TilingError;
use crate::exec;
use crate::poly::oriented_cells;
use crate::poly::{Cell, Isometry, Polygon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationMode {
    TranslationsOnly,
    All8,
}

impl OrientationMode {
    fn isometries(self) -> Vec<Isometry> {
        match self {
            OrientationMode::TranslationsOnly => vec![Isometry::IDENTITY],
            OrientationMode::All8 => Isometry::all().collect(),
        }
    }
}

/// A copy of the tile: the interior cells transformed by `orientation`,
/// translated so their minimum corner is at the origin, then shifted to
/// `anchor` on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Placement {
    pub orientation: u8,
    pub anchor: (i32, i32),
}

/// Exact cover of a torus by copies of one tile.
///
/// The torus is the plane modulo the lattice spanned by `(width, 0)` and
/// `(shear, height)`, with `0 <= shear < width`; `shear = 0` is the ordinary
/// `width × height` torus. Cells are represented by `0 <= x < width`,
/// `0 <= y < height`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusTiling {
    pub width: usize,
    pub height: usize,
    #[serde(default)]
    pub shear: usize,
    /// Turn word of the tile.
    pub tile: String,
    pub placements: Vec<Placement>,
}

/// Period lattice spanned by `(width, 0)` and `(shear, height)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Torus {
    pub width: usize,
    pub height: usize,
    pub shear: usize,
}

impl Torus {
    pub fn of(t: &TorusTiling) -> Torus {
        Torus {
            width: t.width,
            height: t.height,
            shear: t.shear,
        }
    }

    pub fn cells(&self) -> usize {
        self.width * self.height
    }

    /// Index `x * height + y` of the representative of `(x, y)`.
    pub fn index(&self, (x, y): Cell) -> usize {
        let (w, h, s) = (self.width as i64, self.height as i64, self.shear as i64);
        let q = i64::from(y).div_euclid(h);
        let ry = i64::from(y) - q * h;
        let rx = (i64::from(x) - q * s).rem_euclid(w);
        (rx * h + ry) as usize
    }
}

/// Torus cells covered by a copy of `shape` at `anchor`, sorted. `None`
/// when two cells of the copy land on the same torus cell.
fn placement_cells(shape: &[Cell], anchor: (i32, i32), torus: Torus) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = shape
        .iter()
        .map(|&(x, y)| torus.index((x + anchor.0, y + anchor.1)))
        .collect();
    idx.sort_unstable();
    let before = idx.len();
    idx.dedup();
    (idx.len() == before).then_some(idx)
}

struct CoverProblem {
    placements: Vec<(Placement, Vec<usize>)>,
    /// Placement ids covering each torus cell, in generation order.
    covering: Vec<Vec<usize>>,
}

impl CoverProblem {
    fn new(cells: &[Cell], torus: Torus, mode: OrientationMode) -> Self {
        let mut shapes: Vec<(Isometry, Vec<Cell>)> = Vec::new();
        for iso in mode.isometries() {
            let shape = oriented_cells(cells, iso);
            if !shapes.iter().any(|(_, s)| *s == shape) {
                shapes.push((iso, shape));
            }
        }
        let mut placements: Vec<(Placement, Vec<usize>)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (iso, shape) in &shapes {
            for ax in 0..torus.width as i32 {
                for ay in 0..torus.height as i32 {
                    if let Some(idx) = placement_cells(shape, (ax, ay), torus) {
                        if seen.insert(idx.clone()) {
                            placements.push((
                                Placement {
                                    orientation: iso.index(),
                                    anchor: (ax, ay),
                                },
                                idx,
                            ));
                        }
                    }
                }
            }
        }
        let mut covering = vec![Vec::new(); torus.cells()];
        for (id, (_, idx)) in placements.iter().enumerate() {
            for &c in idx {
                covering[c].push(id);
            }
        }
        CoverProblem {
            placements,
            covering,
        }
    }

    /// Always branch on the least uncovered cell. Every cell must be covered
    /// by some copy, so this loses no solutions.
    fn solve(&self, covered: &mut [bool], from: usize, chosen: &mut Vec<usize>) -> bool {
        let Some(cell) = (from..covered.len()).find(|&c| !covered[c]) else {
            return true;
        };
        for &id in &self.covering[cell] {
            let cells = &self.placements[id].1;
            if cells.iter().any(|&c| covered[c]) {
                continue;
            }
            cells.iter().for_each(|&c| covered[c] = true);
            chosen.push(id);
            if self.solve(covered, cell + 1, chosen) {
                return true;
            }
            chosen.pop();
            cells.iter().for_each(|&c| covered[c] = false);
        }
        false
    }
}

/// Exact cover of the `width × height` torus, or `None` if none exists.
pub fn torus_cover(
    polygon: &Polygon,
    width: usize,
    height: usize,
    mode: OrientationMode,
) -> Option<TorusTiling> {
    sheared_torus_cover(polygon, width, height, 0, mode)
}

/// Exact cover of the torus with period lattice `(width, 0)`, `(shear, height)`.
pub fn sheared_torus_cover(
    polygon: &Polygon,
    width: usize,
    height: usize,
    shear: usize,
    mode: OrientationMode,
) -> Option<TorusTiling> {
    let cells = polygon.rasterize();
    let area = cells.len();
    if width == 0 || height == 0 || shear >= width || area == 0 || (width * height) % area != 0 {
        return None;
    }
    let torus = Torus {
        width,
        height,
        shear,
    };
    let problem = CoverProblem::new(&cells, torus, mode);
    let mut covered = vec![false; torus.cells()];
    let mut chosen = Vec::new();
    if !problem.solve(&mut covered, 0, &mut chosen) {
        return None;
    }
    let mut placements: Vec<Placement> =
        chosen.iter().map(|&id| problem.placements[id].0).collect();
    placements.sort_unstable();
    Some(TorusTiling {
        width,
        height,
        shear,
        tile: polygon.turns().to_string(),
        placements,
    })
}

/// Smallest side a torus needs for `area` cells to fit at all.
fn min_side(area: usize) -> usize {
    let mut s = 1;
    while s * s < area {
        s += 1;
    }
    s
}

/// Lagrange-reduced basis of the lattice spanned by `(width, 0)` and
/// `(shear, height)`.
fn reduced_basis(t: Torus) -> [(i64, i64); 2] {
    let norm = |(x, y): (i64, i64)| x * x + y * y;
    let mut a = (t.width as i64, 0);
    let mut b = (t.shear as i64, t.height as i64);
    loop {
        if norm(b) < norm(a) {
            std::mem::swap(&mut a, &mut b);
        }
        let dot = a.0 * b.0 + a.1 * b.1;
        let k = (2 * dot + norm(a)).div_euclid(2 * norm(a));
        if k == 0 {
            return [a, b];
        }
        b = (b.0 - k * a.0, b.1 - k * a.1);
        if norm(b) >= norm(a) {
            return [a, b];
        }
    }
}

/// Sheared lattices whose reduced basis vectors have both coordinates within
/// `max_dim`, with index a multiple of `area`, ordered by
/// `(index, width, height, shear)`.
fn sheared_candidates(area: usize, max_dim: usize) -> Vec<Vec<Torus>> {
    let box_fits = |t: Torus| {
        reduced_basis(t)
            .iter()
            .all(|&(x, y)| x.unsigned_abs().max(y.unsigned_abs()) <= max_dim as u64)
    };
    let max_index = 2 * max_dim * max_dim;
    (area..=max_index)
        .step_by(area)
        .map(|index| {
            (1..=index)
                .filter(|w| index % w == 0)
                .flat_map(|width| {
                    (1..width).map(move |shear| Torus {
                        width,
                        height: index / width,
                        shear,
                    })
                })
                .filter(|&t| box_fits(t))
                .collect::<Vec<_>>()
        })
        .filter(|group| !group.is_empty())
        .collect()
}

/// Tries every `width × height` torus with both sides at most `max_dim` and
/// area a multiple of the tile's, in lexicographic order, and returns the
/// first cover found.
///
/// If none covers, sheared tori are tried next: every period lattice
/// `(width, 0)`, `(shear, height)` with `shear > 0` whose reduced basis fits
/// in the `max_dim` box, by increasing index. Some tiles only admit lattices
/// whose axis-parallel periods are long, e.g. `(5, 1)` and `(3, -5)`, whose
/// shortest horizontal period is 28.
pub fn torus_search(
    polygon: &Polygon,
    max_dim: usize,
    mode: OrientationMode,
) -> Result<Option<TorusTiling>, TilingError> {
    let area = polygon.area() as usize;
    let needed = min_side(area);
    if max_dim < needed {
        return Err(TilingError::InvalidParameter(format!(
            "max_dim {max_dim} is below the smallest feasible torus side {needed} for area {area}"
        )));
    }
    let rectangular: Vec<Torus> = (1..=max_dim)
        .flat_map(|width| {
            (1..=max_dim).map(move |height| Torus {
                width,
                height,
                shear: 0,
            })
        })
        .filter(|t| t.cells() % area == 0)
        .collect();
    let attempt = |t: &Torus| sheared_torus_cover(polygon, t.width, t.height, t.shear, mode);
    if let Some(found) = exec::find_map_first(&rectangular, attempt) {
        return Ok(Some(found));
    }
    Ok(sheared_candidates(area, max_dim)
        .iter()
        .find_map(|group| exec::find_map_first(group, attempt)))
}

/// Re-rasterises every placement and checks that each torus cell is covered
/// exactly once.
pub fn verify_torus(polygon: &Polygon, cert: &TorusTiling) -> bool {
    if cert.tile != polygon.turns().to_string()
        || cert.width == 0
        || cert.height == 0
        || cert.shear >= cert.width
    {
        return false;
    }
    let torus = Torus::of(cert);
    let cells = polygon.rasterize();
    if cert.placements.len() * cells.len() != cert.width * cert.height {
        return false;
    }
    let mut counts = vec![0u32; torus.cells()];
    for p in &cert.placements {
        let Some(iso) = Isometry::new(p.orientation) else {
            return false;
        };
        let in_range = (0..cert.width as i32).contains(&p.anchor.0)
            && (0..cert.height as i32).contains(&p.anchor.1);
        if !in_range {
            return false;
        }
        let shape = oriented_cells(&cells, iso);
        let Some(idx) = placement_cells(&shape, p.anchor, torus) else {
            return false;
        };
        for c in idx {
            counts[c] += 1;
        }
    }
    counts.iter().all(|&k| k == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::validate;

    fn poly(s: &str) -> Polygon {
        validate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn unit_square_on_unit_torus() {
        let sq = poly("LLLL");
        let t = torus_search(&sq, 1, OrientationMode::TranslationsOnly)
            .unwrap()
            .unwrap();
        assert_eq!((t.width, t.height, t.placements.len()), (1, 1, 1));
        assert!(verify_torus(&sq, &t));
    }

    #[test]
    fn plus_on_five_by_five() {
        let plus = poly("LLRLLRLLRLLR");
        let t = torus_search(&plus, 5, OrientationMode::TranslationsOnly)
            .unwrap()
            .unwrap();
        assert_eq!((t.width, t.height, t.placements.len()), (5, 5, 5));
        assert!(verify_torus(&plus, &t));
    }

    #[test]
    fn mutations_rejected() {
        let plus = poly("LLRLLRLLRLLR");
        let t = torus_cover(&plus, 5, 5, OrientationMode::TranslationsOnly).unwrap();
        let mut deleted = t.clone();
        deleted.placements.pop();
        assert!(!verify_torus(&plus, &deleted));
        let mut duplicated = t.clone();
        duplicated.placements[1] = duplicated.placements[0];
        assert!(!verify_torus(&plus, &duplicated));
        let mut wrong_tile = t.clone();
        wrong_tile.tile = "LLLL".into();
        assert!(!verify_torus(&plus, &wrong_tile));
        let mut bad_orientation = t;
        bad_orientation.placements[0].orientation = 9;
        assert!(!verify_torus(&plus, &bad_orientation));
    }

    #[test]
    fn sheared_torus_fits_in_one_copy() {
        // the plus tiles with periods (5, 0) and (3, 1)
        let plus = poly("LLRLLRLLRLLR");
        let t = sheared_torus_cover(&plus, 5, 1, 3, OrientationMode::TranslationsOnly).unwrap();
        assert_eq!(t.placements.len(), 1);
        assert!(verify_torus(&plus, &t));
        assert_eq!(
            sheared_torus_cover(&plus, 5, 1, 1, OrientationMode::TranslationsOnly),
            None
        );
        let mut bad = t;
        bad.shear = 5;
        assert!(!verify_torus(&plus, &bad));
    }

    #[test]
    fn reduced_basis_of_long_lattice() {
        let t = Torus {
            width: 28,
            height: 1,
            shear: 5,
        };
        assert_eq!(reduced_basis(t), [(5, 1), (3, -5)]);
        let r = Torus {
            width: 3,
            height: 7,
            shear: 0,
        };
        assert_eq!(reduced_basis(r), [(3, 0), (0, 7)]);
    }

    #[test]
    fn sheared_phase_after_rectangles() {
        // no rectangle up to 4 works, but periods (2, 1) and (1, -2) do
        let plus = poly("LLRLLRLLRLLR");
        let t = torus_search(&plus, 4, OrientationMode::TranslationsOnly)
            .unwrap()
            .unwrap();
        assert_eq!(
            (t.width, t.height, t.shear, t.placements.len()),
            (5, 1, 2, 1)
        );
        assert!(verify_torus(&plus, &t));
    }

    #[test]
    fn wrapping_copy_rejected() {
        let plus = poly("LLRLLRLLRLLR");
        // three cells wide cannot fit on a torus two cells wide
        assert_eq!(torus_cover(&plus, 2, 5, OrientationMode::All8), None);
        assert_eq!(torus_cover(&plus, 4, 4, OrientationMode::All8), None);
    }
}

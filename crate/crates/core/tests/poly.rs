use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

mod common;

use common::{cells_inside, Cell};
use proptest::prelude::*;
use spatial_claims::poly::{
    canonical, enumerate, enumerate_census, general_right_angle_count, validate, Isometry, Polygon,
    StepWord, SymmetryLabel, Turn, TurnWord,
};

/// Vertices of the walk for an L/R word starting east at the origin, or
/// `None` unless it closes up without touching itself.
fn closed_simple_walk(word: &[bool]) -> Option<Vec<(i32, i32)>> {
    const DIRS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let (mut x, mut y, mut d) = (0i32, 0i32, 0usize);
    let mut seen = HashSet::new();
    let mut pts = Vec::new();
    for &left in word {
        if !seen.insert((x, y)) {
            return None;
        }
        pts.push((x, y));
        x += DIRS[d].0;
        y += DIRS[d].1;
        d = if left { (d + 1) % 4 } else { (d + 3) % 4 };
    }
    ((x, y) == (0, 0) && d == 0).then_some(pts)
}

fn normalized(mut cells: Vec<Cell>) -> Vec<Cell> {
    let mx = cells.iter().map(|c| c.0).min().unwrap();
    let my = cells.iter().map(|c| c.1).min().unwrap();
    for c in &mut cells {
        *c = (c.0 - mx, c.1 - my);
    }
    cells.sort();
    cells
}

/// Least normalized image of the cell set under the chosen isometries.
fn shape_key(cells: &[Cell], with_reflections: bool) -> Vec<Cell> {
    let maps: [fn(Cell) -> Cell; 8] = [
        |(x, y)| (x, y),
        |(x, y)| (-y, x),
        |(x, y)| (-x, -y),
        |(x, y)| (y, -x),
        |(x, y)| (x, -y),
        |(x, y)| (y, x),
        |(x, y)| (-x, y),
        |(x, y)| (-y, -x),
    ];
    let count = if with_reflections { 8 } else { 4 };
    // cell (x, y) is the square [x, x+1] x [y, y+1]; map its centre
    maps[..count]
        .iter()
        .map(|m| {
            normalized(
                cells
                    .iter()
                    .map(|&(x, y)| {
                        let (u, v) = m((2 * x + 1, 2 * y + 1));
                        ((u - 1).div_euclid(2), (v - 1).div_euclid(2))
                    })
                    .collect(),
            )
        })
        .min()
        .unwrap()
}

/// Class counts `(congruence, rotation only)` by brute force over all words.
fn unpruned_counts(n: usize) -> (BTreeSet<Vec<Cell>>, usize) {
    let mut classes = BTreeSet::new();
    let mut chiral = BTreeSet::new();
    for bits in 0u32..(1 << n) {
        let word: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        let Some(pts) = closed_simple_walk(&word) else {
            continue;
        };
        let cells = cells_inside(&pts);
        if cells.is_empty() {
            continue;
        }
        classes.insert(shape_key(&cells, true));
        chiral.insert(shape_key(&cells, false));
    }
    (classes, chiral.len())
}

#[test]
fn pruned_enumeration_matches_brute_force() {
    for n in (4..=16).step_by(2) {
        let (classes, chiral) = unpruned_counts(n);
        let census = enumerate_census(n).unwrap();
        assert_eq!(census.classes.len(), classes.len(), "n = {n}");
        assert_eq!(census.orientation_preserving, chiral, "n = {n}");
        let keys: BTreeSet<Vec<Cell>> = enumerate(n)
            .unwrap()
            .iter()
            .map(|p| shape_key(&p.rasterize(), true))
            .collect();
        assert_eq!(keys, classes, "n = {n}");
    }
}

#[test]
fn family_of_24() {
    let census = enumerate_census(24).unwrap();
    assert_eq!(census.classes.len(), 7);
    let family = enumerate(24).unwrap();
    for p in &family {
        assert_eq!(p.sides(), 24);
        assert_eq!(p.right_angle_count(), (14, 10));
        assert_eq!(p.turns().count(Turn::L) - p.turns().count(Turn::R), 4);
        assert_eq!(p.rasterize().len() as u64, p.area());
        assert_eq!(canonical(p.turns()).word(), p.turns());
    }
    assert!(family
        .iter()
        .any(|p| p.symmetry_group().label == SymmetryLabel::Trivial));
    assert!(family.iter().any(|p| !p.is_alternating()));
    assert!(family.iter().all(|p| !p.is_convex()));
    // mirror pairs of chiral classes
    let chiral = family
        .iter()
        .filter(|p| {
            p.symmetry_group()
                .isometries
                .iter()
                .all(|i| !i.is_reflection())
        })
        .count();
    assert_eq!(census.orientation_preserving, 7 + chiral);
}

#[test]
fn shoelace_area_equals_cell_count() {
    for n in (4..=20).step_by(2) {
        for p in enumerate(n).unwrap() {
            let pts: Vec<(i32, i32)> = p.vertices().to_vec();
            assert_eq!(cells_inside(&pts).len() as u64, p.area());
        }
    }
}

#[test]
fn pentomino_with_five_right_angles() {
    let p: StepWord = "EENNWNWSSS".parse().unwrap();
    assert_eq!(general_right_angle_count(&p), Ok((5, 1)));
    let rect: StepWord = "EEENNWWWSS".parse().unwrap();
    assert_eq!(general_right_angle_count(&rect), Ok((4, 0)));
}

fn pool() -> &'static [Polygon] {
    static POOL: OnceLock<Vec<Polygon>> = OnceLock::new();
    POOL.get_or_init(|| {
        [12, 16, 18, 20, 24]
            .iter()
            .flat_map(|&n| enumerate(n).unwrap())
            .collect()
    })
}

/// The same polygon traced from another vertex, after an isometry, and
/// optionally in the opposite direction.
fn transformed(p: &Polygon, start: usize, iso: Isometry, reverse: bool) -> TurnWord {
    let moved = iso.apply_steps(&p.steps().rotated(start));
    let steps = if reverse { moved.hat() } else { moved };
    steps.turns().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_isometry_invariant(
        pick in any::<prop::sample::Index>(),
        start in 0usize..24,
        iso in 0u8..8,
        reverse in any::<bool>(),
    ) {
        let p = &pool()[pick.index(pool().len())];
        let word = transformed(p, start % p.sides(), Isometry::new(iso).unwrap(), reverse);
        prop_assert_eq!(canonical(&word), canonical(p.turns()));
        let q = validate(&word).unwrap();
        prop_assert_eq!(q.area(), p.area());
        prop_assert_eq!(q.symmetry_group().label, p.symmetry_group().label);
    }
}

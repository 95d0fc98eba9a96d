use std::collections::{BTreeSet, HashSet};

use super::canonical::{canonical, canonical_chiral, CanonicalForm};
use super::polygon::{validate, Point, Polygon};
use super::word::{Dir, Turn, TurnWord};
use super::PolyError;
use crate::exec;

/// Classes found for one side count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCensus {
    pub sides: usize,
    /// One canonical word per congruence class (mirror images identified),
    /// ascending.
    pub classes: Vec<CanonicalForm>,
    /// Number of classes when mirror images are counted separately.
    pub orientation_preserving: usize,
    /// Counterclockwise words starting with an east step at the origin.
    pub raw_words: usize,
}

/// Depth at which the search tree is split into independent tasks.
const SPLIT_DEPTH: usize = 10;

#[derive(Clone)]
struct Walk {
    word: Vec<Turn>,
    pos: Point,
    dir: Dir,
    visited: HashSet<Point>,
    left_turns: usize,
}

struct Search {
    sides: usize,
    left_target: usize,
}

impl Search {
    /// Depth-first search over turn letters. Prunes on revisited vertices,
    /// on the origin being out of reach, and on the L/R budget
    /// (`count(L) = (n + 4) / 2` for a counterclockwise word).
    fn extend(
        &self,
        walk: &mut Walk,
        stop_at: usize,
        out: &mut Vec<Walk>,
        found: &mut Vec<TurnWord>,
    ) {
        let n = self.sides;
        let k = walk.word.len();
        if k == n - 1 {
            if walk.pos == (0, 0) {
                for t in [Turn::L, Turn::R] {
                    let lefts = walk.left_turns + usize::from(t == Turn::L);
                    if walk.dir.turn(t) == Dir::E && lefts == self.left_target {
                        let mut word = walk.word.clone();
                        word.push(t);
                        found.push(TurnWord::new(word));
                    }
                }
            }
            return;
        }
        if k == stop_at {
            out.push(walk.clone());
            return;
        }
        for t in [Turn::L, Turn::R] {
            let lefts = walk.left_turns + usize::from(t == Turn::L);
            let rights = k + 1 - lefts;
            if lefts > self.left_target || rights > n - self.left_target {
                continue;
            }
            let dir = walk.dir.turn(t);
            let (dx, dy) = dir.delta();
            let pos = (walk.pos.0 + dx, walk.pos.1 + dy);
            let remaining = n - k - 2;
            if (pos.0.unsigned_abs() + pos.1.unsigned_abs()) as usize > remaining {
                continue;
            }
            let closing = pos == (0, 0);
            if closing && remaining != 0 {
                continue;
            }
            if !closing && walk.visited.contains(&pos) {
                continue;
            }
            let saved = (walk.pos, walk.dir, walk.left_turns);
            walk.word.push(t);
            walk.pos = pos;
            walk.dir = dir;
            walk.left_turns = lefts;
            if !closing {
                walk.visited.insert(pos);
            }
            self.extend(walk, stop_at, out, found);
            if !closing {
                walk.visited.remove(&pos);
            }
            walk.word.pop();
            (walk.pos, walk.dir, walk.left_turns) = saved;
        }
    }
}

fn check_sides(sides: usize) -> Result<(), PolyError> {
    if sides < 4 || sides % 2 != 0 {
        return Err(PolyError::InvalidParameter(format!(
            "side count must be even and at least 4, got {sides}"
        )));
    }
    Ok(())
}

/// Every counterclockwise turn word with `sides` letters whose realisation
/// from the origin heading east is a simple closed polygon.
fn raw_words(sides: usize) -> Vec<TurnWord> {
    let search = Search {
        sides,
        left_target: (sides + 4) / 2,
    };
    let mut root = Walk {
        word: Vec::with_capacity(sides),
        pos: (1, 0),
        dir: Dir::E,
        visited: HashSet::from([(0, 0), (1, 0)]),
        left_turns: 0,
    };
    let mut frontier = Vec::new();
    let mut found = Vec::new();
    search.extend(&mut root, SPLIT_DEPTH, &mut frontier, &mut found);
    let finished = exec::map_collect(&frontier, |walk| {
        let mut walk = walk.clone();
        let mut words = Vec::new();
        search.extend(&mut walk, usize::MAX, &mut Vec::new(), &mut words);
        words
    });
    found.extend(finished.into_iter().flatten());
    found.sort();
    found
}

/// Counts and representatives of the family with `sides` sides.
pub fn enumerate_census(sides: usize) -> Result<FamilyCensus, PolyError> {
    check_sides(sides)?;
    let words = raw_words(sides);
    let classes: BTreeSet<CanonicalForm> = words.iter().map(canonical).collect();
    let chiral: BTreeSet<CanonicalForm> = words.iter().map(canonical_chiral).collect();
    Ok(FamilyCensus {
        sides,
        classes: classes.into_iter().collect(),
        orientation_preserving: chiral.len(),
        raw_words: words.len(),
    })
}

/// One polygon per congruence class, realised from its canonical word and
/// sorted by it.
pub fn enumerate(sides: usize) -> Result<Vec<Polygon>, PolyError> {
    let census = enumerate_census(sides)?;
    census.classes.iter().map(|c| validate(c.word())).collect()
}

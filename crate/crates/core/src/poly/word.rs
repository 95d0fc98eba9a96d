use std::fmt;
use std::str::FromStr;

use super::PolyError;

/// Corner letter. `L` (convex) sorts before `R` (reflex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Turn {
    L,
    R,
}

impl Turn {
    pub fn flip(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }

    fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }
}

/// Unit lattice direction, listed counterclockwise from east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    E,
    N,
    W,
    S,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::E, Dir::N, Dir::W, Dir::S];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Dir {
        Self::ALL[(i % 4) as usize]
    }

    pub fn delta(self) -> (i32, i32) {
        match self {
            Dir::E => (1, 0),
            Dir::N => (0, 1),
            Dir::W => (-1, 0),
            Dir::S => (0, -1),
        }
    }

    pub fn ccw(self) -> Dir {
        Dir::from_index(self.index() + 1)
    }

    pub fn cw(self) -> Dir {
        Dir::from_index(self.index() + 3)
    }

    pub fn opposite(self) -> Dir {
        Dir::from_index(self.index() + 2)
    }

    pub fn turn(self, t: Turn) -> Dir {
        match t {
            Turn::L => self.ccw(),
            Turn::R => self.cw(),
        }
    }

    /// The turn taking `self` to `next`, if they are perpendicular.
    pub fn turn_to(self, next: Dir) -> Option<Turn> {
        if self.ccw() == next {
            Some(Turn::L)
        } else if self.cw() == next {
            Some(Turn::R)
        } else {
            None
        }
    }

    fn as_char(self) -> char {
        match self {
            Dir::E => 'E',
            Dir::N => 'N',
            Dir::W => 'W',
            Dir::S => 'S',
        }
    }
}

/// Cyclic sequence of corners, letter `k` sitting between edge `k` and edge
/// `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TurnWord(Vec<Turn>);

impl TurnWord {
    pub fn new(turns: Vec<Turn>) -> Self {
        TurnWord(turns)
    }

    pub fn letters(&self) -> &[Turn] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, t: Turn) -> usize {
        self.0.iter().filter(|&&x| x == t).count()
    }

    /// Net quarter turns, `count(L) - count(R)`.
    pub fn winding(&self) -> i64 {
        self.count(Turn::L) as i64 - self.count(Turn::R) as i64
    }

    /// Cyclic rotation starting at letter `k`.
    pub fn rotated(&self, k: usize) -> TurnWord {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let len = v.len();
            v.rotate_left(k % len);
        }
        TurnWord(v)
    }

    pub fn reversed(&self) -> TurnWord {
        TurnWord(self.0.iter().rev().copied().collect())
    }

    /// Reverse the order and swap `L`/`R`: the same boundary walked backwards.
    pub fn reverse_complement(&self) -> TurnWord {
        TurnWord(self.0.iter().rev().map(|t| t.flip()).collect())
    }
}

impl FromStr for TurnWord {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                'L' => Ok(Turn::L),
                'R' => Ok(Turn::R),
                found => Err(PolyError::Parse {
                    found,
                    position,
                    expected: "L, R",
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TurnWord)
    }
}

impl fmt::Display for TurnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{}", t.as_char()))
    }
}

/// Cyclic sequence of unit lattice steps.
///
/// Polygon boundaries never repeat or reverse a direction between
/// consecutive steps. General rectilinear walks, which may go straight, are
/// also representable (see [`super::general_right_angle_count`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StepWord(Vec<Dir>);

impl StepWord {
    pub fn new(steps: Vec<Dir>) -> Self {
        StepWord(steps)
    }

    pub fn steps(&self) -> &[Dir] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn displacement(&self) -> (i32, i32) {
        displacement(&self.0)
    }

    pub fn rotated(&self, k: usize) -> StepWord {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let len = v.len();
            v.rotate_left(k % len);
        }
        StepWord(v)
    }

    /// Reverse the order and replace each step by its opposite.
    pub fn hat(&self) -> StepWord {
        StepWord(hat(&self.0))
    }

    /// Cyclic turn word; fails if two consecutive steps are not perpendicular.
    pub fn turns(&self) -> Result<TurnWord, PolyError> {
        let n = self.0.len();
        (0..n)
            .map(|k| {
                let next = (k + 1) % n;
                self.0[k]
                    .turn_to(self.0[next])
                    .ok_or(PolyError::NotPerpendicular { index: k, next })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TurnWord)
    }

    /// Lattice points visited from `origin`, one per step start.
    pub fn trace(&self, origin: (i32, i32)) -> Vec<(i32, i32)> {
        let mut p = origin;
        self.0
            .iter()
            .map(|d| {
                let here = p;
                let (dx, dy) = d.delta();
                p = (p.0 + dx, p.1 + dy);
                here
            })
            .collect()
    }
}

pub(crate) fn displacement(steps: &[Dir]) -> (i32, i32) {
    steps.iter().fold((0, 0), |(x, y), d| {
        let (dx, dy) = d.delta();
        (x + dx, y + dy)
    })
}

pub(crate) fn hat(steps: &[Dir]) -> Vec<Dir> {
    steps.iter().rev().map(|d| d.opposite()).collect()
}

impl FromStr for StepWord {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                'E' => Ok(Dir::E),
                'N' => Ok(Dir::N),
                'W' => Ok(Dir::W),
                'S' => Ok(Dir::S),
                found => Err(PolyError::Parse {
                    found,
                    position,
                    expected: "E, N, W, S",
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StepWord)
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|d| write!(f, "{}", d.as_char()))
    }
}

/// Realises a turn word as steps: step 0 is `start`, and step `k + 1` is step
/// `k` turned by letter `k`. Closure is not checked here.
pub fn steps_from_turns(turns: &TurnWord, start: Dir) -> StepWord {
    let mut steps = Vec::with_capacity(turns.len());
    let mut d = start;
    for (k, &t) in turns.letters().iter().enumerate() {
        steps.push(d);
        if k + 1 < turns.len() {
            d = d.turn(t);
        }
    }
    StepWord(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(s: &str) -> StepWord {
        s.parse().unwrap()
    }

    #[test]
    fn realisation_examples() {
        let square: TurnWord = "LLLL".parse().unwrap();
        assert_eq!(steps_from_turns(&square, Dir::E), sw("ENWS"));
        assert_eq!(steps_from_turns(&square, Dir::N), sw("NWSE"));
        let plus: TurnWord = "LLRLLRLLRLLR".parse().unwrap();
        let steps = steps_from_turns(&plus, Dir::E);
        assert_eq!(steps.len(), 12);
        assert_eq!(&steps.steps()[..3], &[Dir::E, Dir::N, Dir::W]);
        let bad: TurnWord = "LRLR".parse().unwrap();
        assert_eq!(steps_from_turns(&bad, Dir::E), sw("ENEN"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "LLXL".parse::<TurnWord>(),
            Err(PolyError::Parse {
                found: 'X',
                position: 2,
                expected: "L, R"
            })
        );
        assert!("ENQ".parse::<StepWord>().is_err());
        assert_eq!("LRRL".parse::<TurnWord>().unwrap().to_string(), "LRRL");
    }

    #[test]
    fn word_operations() {
        let w: TurnWord = "LLRLR".parse().unwrap();
        assert_eq!(w.rotated(2).to_string(), "RLRLL");
        assert_eq!(w.reverse_complement().to_string(), "LRLRR");
        assert_eq!(w.winding(), 1);
        assert_eq!(sw("ENWS").turns().unwrap().to_string(), "LLLL");
        assert_eq!(
            sw("EENWWS").turns(),
            Err(PolyError::NotPerpendicular { index: 0, next: 1 })
        );
        assert_eq!(sw("EN").hat(), sw("SW"));
        assert_eq!(sw("EENN").displacement(), (2, 2));
    }
}

use serde::{Deserialize, Serialize};

use super::GameError;

/// Longest line a [`BoardPosition`] can represent.
pub const MAX_BOARD_LEN: u32 = 128;

/// A line of `length` cells numbered `1..=length` with some counters placed.
///
/// Cell `i` is stored as bit `i - 1` of the occupancy mask, which doubles as
/// the memoisation key for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "BoardRepr", try_from = "BoardRepr")]
pub struct BoardPosition {
    length: u32,
    occupied: u128,
}

/// Serialised form: the length and the occupied cells, ascending.
#[derive(Serialize, Deserialize)]
struct BoardRepr {
    length: u32,
    occupied: Vec<u32>,
}

impl From<BoardPosition> for BoardRepr {
    fn from(b: BoardPosition) -> Self {
        BoardRepr {
            length: b.length,
            occupied: b.occupied(),
        }
    }
}

impl TryFrom<BoardRepr> for BoardPosition {
    type Error = GameError;

    fn try_from(r: BoardRepr) -> Result<Self, Self::Error> {
        BoardPosition::with_counters(r.length, &r.occupied)
    }
}

impl BoardPosition {
    /// The empty line of `length` cells.
    pub fn new(length: u32) -> Result<Self, GameError> {
        if length > MAX_BOARD_LEN {
            return Err(GameError::InvalidBoard(format!(
                "length {length} exceeds the supported maximum of {MAX_BOARD_LEN}"
            )));
        }
        Ok(BoardPosition {
            length,
            occupied: 0,
        })
    }

    /// A board with counters on `cells`. Rejects out-of-range, duplicate and
    /// adjacent counters.
    pub fn with_counters(length: u32, cells: &[u32]) -> Result<Self, GameError> {
        let mut board = Self::new(length)?;
        for &cell in cells {
            if cell == 0 || cell > length {
                return Err(GameError::InvalidBoard(format!(
                    "cell {cell} is outside 1..={length}"
                )));
            }
            let bit = 1u128 << (cell - 1);
            if board.occupied & bit != 0 {
                return Err(GameError::InvalidBoard(format!("cell {cell} listed twice")));
            }
            if board.occupied & ((bit << 1) | (bit >> 1)) != 0 {
                return Err(GameError::InvalidBoard(format!(
                    "cell {cell} is adjacent to another counter"
                )));
            }
            board.occupied |= bit;
        }
        Ok(board)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Raw occupancy mask (cell `i` at bit `i - 1`).
    pub fn mask(&self) -> u128 {
        self.occupied
    }

    /// Occupied cells in increasing order.
    pub fn occupied(&self) -> Vec<u32> {
        cells_of(self.occupied)
    }

    pub fn is_occupied(&self, cell: u32) -> bool {
        cell >= 1 && cell <= self.length && self.occupied & (1u128 << (cell - 1)) != 0
    }

    pub fn counter_count(&self) -> u32 {
        self.occupied.count_ones()
    }

    fn full_mask(&self) -> u128 {
        if self.length == 128 {
            u128::MAX
        } else {
            (1u128 << self.length) - 1
        }
    }

    /// Mask of cells where a counter may be placed.
    pub fn legal_mask(&self) -> u128 {
        let blocked = self.occupied | (self.occupied << 1) | (self.occupied >> 1);
        !blocked & self.full_mask()
    }

    /// Empty cells whose in-range neighbours are all empty, ascending.
    pub fn legal_moves(&self) -> Vec<u32> {
        cells_of(self.legal_mask())
    }

    pub fn has_legal_move(&self) -> bool {
        self.legal_mask() != 0
    }

    pub fn apply_move(&self, cell: u32) -> Result<BoardPosition, GameError> {
        let illegal = |reason| GameError::IllegalMove {
            cell,
            length: self.length,
            reason,
        };
        if cell == 0 || cell > self.length {
            return Err(illegal("cell out of range"));
        }
        let bit = 1u128 << (cell - 1);
        if self.occupied & bit != 0 {
            return Err(illegal("cell already occupied"));
        }
        if self.legal_mask() & bit == 0 {
            return Err(illegal("cell is adjacent to a counter"));
        }
        Ok(BoardPosition {
            length: self.length,
            occupied: self.occupied | bit,
        })
    }

    /// Splits the board into independent free rows.
    ///
    /// Each maximal empty run of `k` cells with `f` counter-adjacent ends
    /// behaves exactly like a free row of `k - f` cells, since the cells next
    /// to a counter can never be played. Board ends are not counters.
    pub fn segments(&self) -> SegmentPosition {
        let mut lengths = Vec::new();
        let mut run = 0u32;
        let mut flanked_left = false;
        for cell in 1..=self.length {
            if self.is_occupied(cell) {
                if run > 0 {
                    let flanks = u32::from(flanked_left) + 1;
                    lengths.push(run.saturating_sub(flanks));
                }
                run = 0;
                flanked_left = true;
            } else {
                run += 1;
            }
        }
        if run > 0 {
            lengths.push(run.saturating_sub(u32::from(flanked_left)));
        }
        SegmentPosition {
            effective_lengths: lengths,
        }
    }
}

impl std::fmt::Display for BoardPosition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for cell in 1..=self.length {
            f.write_str(if self.is_occupied(cell) { "o" } else { "." })?;
        }
        Ok(())
    }
}

fn cells_of(mut mask: u128) -> Vec<u32> {
    let mut cells = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        cells.push(mask.trailing_zeros() + 1);
        mask &= mask - 1;
    }
    cells
}

/// The free-row decomposition of a board: one effective length per maximal
/// empty run, in left-to-right order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentPosition {
    pub effective_lengths: Vec<u32>,
}

impl SegmentPosition {
    /// Lengths with zero entries removed and sorted, for multiset comparison.
    pub fn normalized(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .effective_lengths
            .iter()
            .copied()
            .filter(|&k| k > 0)
            .collect();
        v.sort_unstable();
        v
    }
}

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{BoardPosition, Player};

/// Memoised Grundy values `g[k]` of free rows of `k` cells.
///
/// Placing a counter at cell `i` of a free row of `k` kills the neighbours, so
/// it leaves free rows of `i - 2` and `k - i - 1` cells (clipped at zero):
///
/// `g[k] = mex { g[max(i-2,0)] ^ g[max(k-i-1,0)] : 1 <= i <= k }`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    values: Vec<u32>,
}

impl Default for GrundyTable {
    fn default() -> Self {
        Self::new()
    }
}

impl GrundyTable {
    pub fn new() -> Self {
        GrundyTable { values: vec![0] }
    }

    /// A table already filled through `max_n`.
    pub fn with_capacity(max_n: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(max_n);
        t
    }

    pub fn extend_to(&mut self, max_n: usize) {
        let mut seen = Vec::new();
        while self.values.len() <= max_n {
            let k = self.values.len();
            seen.clear();
            // the move at i and at k+1-i give the same split
            for i in 1..=k.div_ceil(2) {
                let left = self.values[i.saturating_sub(2)];
                let right = self.values[k.saturating_sub(i + 1)];
                let v = (left ^ right) as usize;
                if v >= seen.len() {
                    seen.resize(v + 1, false);
                }
                seen[v] = true;
            }
            let mex = seen.iter().position(|&s| !s).unwrap_or(seen.len());
            self.values.push(mex as u32);
        }
    }

    pub fn get(&mut self, n: usize) -> u32 {
        self.extend_to(n);
        self.values[n]
    }

    /// Value for `n` if already tabulated.
    pub fn lookup(&self, n: usize) -> Option<u32> {
        self.values.get(n).copied()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// Grundy value of a free row of `n` cells.
pub fn grundy_free_row(n: usize, table: &mut GrundyTable) -> u32 {
    table.get(n)
}

/// `g[0..=max_n]`.
pub fn grundy_sequence(max_n: usize) -> Vec<u32> {
    GrundyTable::with_capacity(max_n).values
}

/// The row game on `n` cells is equivalent to a Nim heap of this size.
pub fn nim_heap_equivalent(n: usize) -> u32 {
    GrundyTable::new().get(n)
}

/// Who wins the row of `n` cells under optimal play. An empty line is a loss
/// for A, who has no move.
pub fn winner(n: usize) -> Player {
    if nim_heap_equivalent(n) != 0 {
        Player::A
    } else {
        Player::B
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrundyMethod {
    /// mex over all successors, memoised on the occupancy mask.
    BruteForce,
    /// XOR of free-row values over the board's segments.
    SegmentXor,
}

/// Exhaustive Grundy evaluation with a memo keyed on `(length, mask)`.
///
/// Independent of [`GrundyTable`]; the two are cross-checked in tests.
#[derive(Debug, Default)]
pub struct BruteForceSolver {
    memo: HashMap<(u32, u128), u32>,
}

impl BruteForceSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn grundy(&mut self, board: &BoardPosition) -> u32 {
        let key = (board.length(), board.mask());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut seen = 0u128;
        let mut legal = board.legal_mask();
        while legal != 0 {
            let cell = legal.trailing_zeros() + 1;
            legal &= legal - 1;
            let next = board
                .apply_move(cell)
                .expect("cell drawn from the legal mask");
            let v = self.grundy(&next);
            if v < 128 {
                seen |= 1u128 << v;
            }
        }
        let mex = (!seen).trailing_zeros();
        self.memo.insert(key, mex);
        mex
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// Grundy value of an arbitrary board.
pub fn grundy_board(board: &BoardPosition, method: GrundyMethod) -> u32 {
    match method {
        GrundyMethod::BruteForce => BruteForceSolver::new().grundy(board),
        GrundyMethod::SegmentXor => {
            let mut table = GrundyTable::with_capacity(board.length() as usize);
            segment_xor(board, &mut table)
        }
    }
}

pub(crate) fn segment_xor(board: &BoardPosition, table: &mut GrundyTable) -> u32 {
    board
        .segments()
        .effective_lengths
        .iter()
        .fold(0, |acc, &k| acc ^ table.get(k as usize))
}

/// The lowest cell whose resulting position has Grundy value zero, or `None`
/// when the board is already a loss for the player to move.
pub fn optimal_move(board: &BoardPosition) -> Option<u32> {
    let mut table = GrundyTable::with_capacity(board.length() as usize);
    if segment_xor(board, &mut table) == 0 {
        return None;
    }
    board.legal_moves().into_iter().find(|&cell| {
        let next = board.apply_move(cell).expect("legal move");
        segment_xor(&next, &mut table) == 0
    })
}

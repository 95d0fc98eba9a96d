use std::collections::HashMap;

use super::BoardPosition;

/// Win/loss search over the sum of a counter row and one Nim heap.
///
/// A move either places a counter or removes one or more objects from the
/// heap. No Grundy arithmetic is used, so this is an independent check of the
/// Sprague-Grundy reduction: row `n` plus a heap of `g[n]` must be a loss for
/// the player to move.
#[derive(Debug, Default)]
pub struct NimCompoundSolver {
    memo: HashMap<(u32, u128, u32), bool>,
}

impl NimCompoundSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// True when the player to move wins.
    pub fn first_player_wins(&mut self, board: &BoardPosition, heap: u32) -> bool {
        let key = (board.length(), board.mask(), heap);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let mut wins = (0..heap).any(|smaller| !self.first_player_wins(board, smaller));
        if !wins {
            let mut legal = board.legal_mask();
            while legal != 0 {
                let cell = legal.trailing_zeros() + 1;
                legal &= legal - 1;
                let next = board.apply_move(cell).expect("legal move");
                if !self.first_player_wins(&next, heap) {
                    wins = true;
                    break;
                }
            }
        }
        self.memo.insert(key, wins);
        wins
    }
}

/// Row of `n` cells plus a Nim heap of `heap` is a second-player win.
pub fn compound_is_second_player_win(n: u32, heap: u32) -> bool {
    let board = BoardPosition::new(n).expect("row length within board limit");
    !NimCompoundSolver::new().first_player_wins(&board, heap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_heap_cancels_row() {
        // g[3] = 2
        assert!(compound_is_second_player_win(3, 2));
        assert!(!compound_is_second_player_win(3, 1));
        assert!(!compound_is_second_player_win(3, 0));
        assert!(compound_is_second_player_win(0, 0));
        assert!(compound_is_second_player_win(4, 0));
    }
}

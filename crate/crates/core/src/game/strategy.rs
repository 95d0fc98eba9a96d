use std::collections::HashMap;

use super::{BoardPosition, GameError, Seat};
use crate::exec;

/// A (possibly history-dependent) rule for choosing moves.
///
/// The strategy sees the current position and the opponent's most recent
/// move, if any. The returned cell must be legal; verification reports an
/// [`GameError::IllegalMove`] otherwise.
pub trait Strategy: Sync {
    fn choose(&self, board: &BoardPosition, last_opponent_move: Option<u32>) -> u32;
}

/// Centre first, then answer cell `i` with cell `n + 1 - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MirrorStrategy {
    n: u32,
}

impl MirrorStrategy {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn center(&self) -> u32 {
        self.n.div_ceil(2)
    }
}

impl Strategy for MirrorStrategy {
    fn choose(&self, _board: &BoardPosition, last_opponent_move: Option<u32>) -> u32 {
        match last_opponent_move {
            None => self.center(),
            Some(i) => self.n + 1 - i,
        }
    }
}

/// The mirror strategy for an odd line of `n` cells.
pub fn mirror_strategy(n: u32) -> Result<MirrorStrategy, GameError> {
    if n == 0 || n % 2 == 0 {
        return Err(GameError::InvalidParameter(format!(
            "mirror strategy needs an odd line length >= 1, got {n}"
        )));
    }
    Ok(MirrorStrategy { n })
}

/// Always plays the lowest legal cell. Loses wherever the position is lost.
#[derive(Debug, Clone, Copy, Default)]
pub struct LowestLegalStrategy;

impl Strategy for LowestLegalStrategy {
    fn choose(&self, board: &BoardPosition, _last: Option<u32>) -> u32 {
        board.legal_moves().first().copied().unwrap_or(0)
    }
}

type Memo = HashMap<(u128, Option<u32>), bool>;

/// Checks that `strategy`, played from `seat` on an empty line of `n` cells,
/// makes the last placement against every possible opponent.
///
/// The opponent's replies are branched exhaustively; the strategy player's
/// moves are fixed by the strategy. Top-level opponent branches run in
/// parallel, each with its own memo.
pub fn verify_strategy<S: Strategy + ?Sized>(
    strategy: &S,
    n: u32,
    seat: Seat,
) -> Result<bool, GameError> {
    let root = BoardPosition::new(n)?;
    let opening = match seat {
        Seat::First => {
            if !root.has_legal_move() {
                return Ok(false);
            }
            let cell = strategy.choose(&root, None);
            root.apply_move(cell)?
        }
        Seat::Second => root,
    };
    let replies = opening.legal_moves();
    if replies.is_empty() {
        return Ok(true);
    }
    exec::try_all(&replies, |&reply| {
        let mut memo = Memo::new();
        let after = opening.apply_move(reply)?;
        strategy_turn(strategy, &after, reply, &mut memo)
    })
}

fn strategy_turn<S: Strategy + ?Sized>(
    strategy: &S,
    board: &BoardPosition,
    last_opponent: u32,
    memo: &mut Memo,
) -> Result<bool, GameError> {
    let key = (board.mask(), Some(last_opponent));
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let result = if !board.has_legal_move() {
        false
    } else {
        let cell = strategy.choose(board, Some(last_opponent));
        let after = board.apply_move(cell)?;
        let mut all = true;
        for reply in after.legal_moves() {
            let next = after.apply_move(reply)?;
            if !strategy_turn(strategy, &next, reply, memo)? {
                all = false;
                break;
            }
        }
        all
    };
    memo.insert(key, result);
    Ok(result)
}

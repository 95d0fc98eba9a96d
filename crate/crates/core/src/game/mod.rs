//! The counter placement game.
//!
//! Two players alternately place counters on a line of `n` empty cells. A
//! counter may not be placed next to another counter. Whoever places the last
//! counter wins (normal play). Player A moves first.

mod board;
mod grundy;
mod nim;
mod period;
mod strategy;

pub use board::{BoardPosition, SegmentPosition, MAX_BOARD_LEN};
pub use grundy::{
    grundy_board, grundy_free_row, grundy_sequence, nim_heap_equivalent, optimal_move, winner,
    BruteForceSolver, GrundyMethod, GrundyTable,
};
pub use nim::{compound_is_second_player_win, NimCompoundSolver};
pub use period::{detect_period, PeriodCertificate, MAX_REMOVAL};
pub use strategy::{
    mirror_strategy, verify_strategy, LowestLegalStrategy, MirrorStrategy, Strategy,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("illegal move at cell {cell} on a board of length {length}: {reason}")]
    IllegalMove {
        cell: u32,
        length: u32,
        reason: &'static str,
    },
    #[error("invalid board: {0}")]
    InvalidBoard(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The two players. A moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::A => f.write_str("A"),
            Player::B => f.write_str("B"),
        }
    }
}

impl std::str::FromStr for Player {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Player::A),
            "B" | "b" => Ok(Player::B),
            other => Err(GameError::InvalidParameter(format!(
                "unknown player {other:?}"
            ))),
        }
    }
}

/// Turn order of the player following a strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Seat {
    First,
    Second,
}

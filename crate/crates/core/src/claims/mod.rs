//! Machine-checkable claims about the game and the polygon family.
//!
//! A [`Claim`] pairs a human-readable statement with a checker drawn from a
//! closed vocabulary ([`Check`]). Running a claim evaluates the statement
//! with the engines and compares the outcome with the expected verdict.

mod builtin;
mod load;
mod report;
mod run;

pub use builtin::builtin_claims;
pub use load::{load_claims, merge_claims, ClaimLoadError};
pub use report::{ClaimReport, ClaimResult, Status, Summary, Verdict};
pub use run::{
    run_claims, Evidence, NimRow, TilingEntry, WinnerRow, MAX_NIM_N, MAX_SIDES, MAX_STRATEGY_N,
    MAX_TORUS_DIM,
};

use serde::{Deserialize, Serialize};

use crate::game::{Player, Seat};

/// Names of every checker kind, as they appear in claim files.
pub const CHECKERS: [&str; 9] = [
    "winner_is",
    "strategy_wins",
    "claim_is_false_with_counterexample",
    "nim_equivalence",
    "polygon_count_is",
    "all_polygons_satisfy",
    "exists_polygon_satisfying",
    "all_polygons_tile",
    "boundary_right_angles",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// Where the assertion comes from, e.g. section and speaker.
    pub source: String,
    pub statement: String,
    #[serde(flatten)]
    pub check: Check,
    pub expected_verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "checker", content = "parameters", rename_all = "snake_case")]
pub enum Check {
    /// The winner of a single row length, or of a run of consecutive lengths.
    WinnerIs(WinnerIs),
    /// A named strategy wins from `seat` for every applicable `n <= max_n`.
    StrategyWins {
        strategy: StrategyName,
        seat: Seat,
        max_n: u32,
    },
    /// A universal assertion about the game, checked first at the nominated
    /// counterexample and then at every `n <= search_max`.
    ClaimIsFalseWithCounterexample {
        assertion: GameAssertion,
        counterexample: u32,
        search_max: u32,
    },
    /// Row `n` plus a Nim heap of `g[n]` is a second-player win for all
    /// `n <= max_n`, by brute force.
    NimEquivalence {
        max_n: u32,
    },
    PolygonCountIs {
        sides: usize,
        count: usize,
        #[serde(default)]
        equivalence: Equivalence,
    },
    AllPolygonsSatisfy {
        sides: usize,
        property: PolygonProperty,
    },
    ExistsPolygonSatisfying {
        sides: usize,
        property: PolygonProperty,
    },
    AllPolygonsTile {
        sides: usize,
        max_dim: usize,
    },
    /// The 90° corner count of a general rectilinear boundary.
    BoundaryRightAngles {
        steps: String,
        count_90: usize,
    },
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::WinnerIs(_) => "winner_is",
            Check::StrategyWins { .. } => "strategy_wins",
            Check::ClaimIsFalseWithCounterexample { .. } => "claim_is_false_with_counterexample",
            Check::NimEquivalence { .. } => "nim_equivalence",
            Check::PolygonCountIs { .. } => "polygon_count_is",
            Check::AllPolygonsSatisfy { .. } => "all_polygons_satisfy",
            Check::ExistsPolygonSatisfying { .. } => "exists_polygon_satisfying",
            Check::AllPolygonsTile { .. } => "all_polygons_tile",
            Check::BoundaryRightAngles { .. } => "boundary_right_angles",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WinnerIs {
    Single { n: u32, winner: Player },
    Table { start: u32, winners: Vec<Player> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyName {
    /// Centre first, then mirror; defined for odd `n`.
    Mirror,
    LowestLegal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, n: u32) -> bool {
        match self {
            Parity::Even => n % 2 == 0,
            Parity::Odd => n % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GameAssertion {
    /// `player` wins every row of positive length with the given parity.
    WinnerForParity { parity: Parity, winner: Player },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    /// Mirror images identified.
    #[default]
    Congruence,
    /// Mirror images counted separately.
    OrientationPreserving,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygonProperty {
    EvenConvexCorners,
    ConvexCorners(usize),
    ReflexCorners(usize),
    Convex,
    /// Corners alternate 90°, 270°, 90°, ...
    Alternating,
    /// Some non-identity isometry maps the polygon to itself.
    Symmetric,
    TrivialSymmetry,
    /// The interior is a union of unit squares whose count equals the area.
    UnitSquareDecomposition,
}

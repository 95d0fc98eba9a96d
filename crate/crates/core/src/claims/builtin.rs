use super::{
    Check, Claim, Equivalence, GameAssertion, Parity, PolygonProperty, StrategyName, WinnerIs,
};
use crate::game::{Player, Seat};
use crate::tiling::DEFAULT_MAX_DIM;

const FAMILY: usize = 24;

fn claim(id: &str, source: &str, statement: &str, check: Check, expected_verdict: bool) -> Claim {
    Claim {
        id: id.into(),
        source: source.into(),
        statement: statement.into(),
        check,
        expected_verdict,
    }
}

fn all(property: PolygonProperty) -> Check {
    Check::AllPolygonsSatisfy {
        sides: FAMILY,
        property,
    }
}

/// The registry of assertions made about the counter game and the
/// 24-sided family, each with the verdict the engines should reach.
pub fn builtin_claims() -> Vec<Claim> {
    use PolygonProperty::*;
    vec![
        claim(
            "GAME-1",
            "Claude 3, counter game",
            "Player A wins the row of 7 empty spaces.",
            Check::WinnerIs(WinnerIs::Single { n: 7, winner: Player::A }),
            true,
        ),
        claim(
            "GAME-2",
            "Claude 3, counter game",
            "On an odd row, playing the centre and then mirroring every reply wins for the first player (checked for n <= 25).",
            Check::StrategyWins { strategy: StrategyName::Mirror, seat: Seat::First, max_n: 25 },
            true,
        ),
        claim(
            "GAME-3",
            "Claude 3, counter game",
            "Player B has a winning strategy whenever the number of spaces is even.",
            Check::ClaimIsFalseWithCounterexample {
                assertion: GameAssertion::WinnerForParity { parity: Parity::Even, winner: Player::B },
                counterexample: 2,
                search_max: 24,
            },
            false,
        ),
        claim(
            "GAME-4",
            "Bing Copilot, case analysis",
            "Winners for rows of 1 to 7 spaces are A, A, A, B, A, A, A.",
            Check::WinnerIs(WinnerIs::Table {
                start: 1,
                winners: vec![Player::A, Player::A, Player::A, Player::B, Player::A, Player::A, Player::A],
            }),
            true,
        ),
        claim(
            "GAME-5",
            "ChatGPT-3.5-Turbo and Claude 3, counter game",
            "The game is a version of Nim: a row of n spaces plus a Nim heap of its Grundy value is a second-player win (checked for n <= 12).",
            Check::NimEquivalence { max_n: 12 },
            true,
        ),
        claim(
            "POLY-1",
            "family census",
            "There are exactly 7 polygons with 24 unit sides and only 90° and 270° corners, up to congruence.",
            Check::PolygonCountIs { sides: FAMILY, count: 7, equivalence: Equivalence::Congruence },
            true,
        ),
        claim(
            "POLY-2",
            "Claude 3, polygon properties",
            "Every polygon in the family has an even number of 90° corners.",
            all(EvenConvexCorners),
            true,
        ),
        claim(
            "POLY-3",
            "Claude 3 and Bing Copilot, polygon properties",
            "Every polygon in the family tiles the plane.",
            Check::AllPolygonsTile { sides: FAMILY, max_dim: DEFAULT_MAX_DIM },
            true,
        ),
        claim("POLY-4", "Claude 3, polygon properties", "Every polygon in the family is symmetric.", all(Symmetric), false),
        claim(
            "POLY-5",
            "Claude 3, polygon properties",
            "Every 90° corner is followed by a 270° corner.",
            all(Alternating),
            false,
        ),
        claim("POLY-6", "Claude 3, polygon properties", "Every polygon in the family is convex.", all(Convex), false),
        claim(
            "POLY-7",
            "Claude 3, polygon properties",
            "Every polygon in the family splits into unit squares, as many as its area.",
            all(UnitSquareDecomposition),
            true,
        ),
        claim(
            "POLY-8",
            "Claude 3, family count",
            "Exactly 2 polygons exist in the family.",
            Check::PolygonCountIs { sides: FAMILY, count: 2, equivalence: Equivalence::Congruence },
            false,
        ),
        claim(
            "POLY-9",
            "even-corner count",
            "Every polygon in the family has exactly 14 corners of 90°.",
            all(ConvexCorners(14)),
            true,
        ),
        claim(
            "POLY-10",
            "symmetry counterexample",
            "Some polygon in the family has no symmetry besides the identity.",
            Check::ExistsPolygonSatisfying { sides: FAMILY, property: TrivialSymmetry },
            true,
        ),
        claim(
            "POLY-11",
            "polyomino boundary",
            "The P-pentomino boundary has 5 corners of 90°, so evenness fails for polyominoes in general.",
            Check::BoundaryRightAngles { steps: "EENNWNWSSS".into(), count_90: 5 },
            true,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn registry_shape() {
        let claims = builtin_claims();
        assert!(claims.len() >= 13);
        let ids: BTreeSet<&str> = claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), claims.len());
        for id in ["GAME-1", "GAME-2", "GAME-3", "GAME-4", "GAME-5"] {
            assert!(ids.contains(id));
        }
        for k in 1..=8 {
            assert!(ids.contains(format!("POLY-{k}").as_str()));
        }
    }
}

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::report::{report_timestamp, ClaimReport, ClaimResult, Status, Summary, Verdict};
use super::{Check, Claim, Equivalence, GameAssertion, PolygonProperty, StrategyName, WinnerIs};
use crate::exec;
use crate::game::{
    compound_is_second_player_win, mirror_strategy, nim_heap_equivalent, optimal_move,
    verify_strategy, winner, BoardPosition, LowestLegalStrategy, Player, Seat, MAX_BOARD_LEN,
};
use crate::poly::{
    enumerate_census, general_right_angle_count, validate, FamilyCensus, Polygon, PolygonExport,
    StepWord,
};
use crate::tiling::{tile_any, TilingCertificate};

/// Largest row checked exhaustively against a strategy.
pub const MAX_STRATEGY_N: u32 = 31;
/// Largest row checked in the Nim compound.
pub const MAX_NIM_N: u32 = 16;
/// Largest side count a claim may enumerate.
pub const MAX_SIDES: usize = 28;
pub const MAX_TORUS_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WinnerRow {
    pub n: u32,
    pub expected: Player,
    pub computed: Player,
    pub grundy: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NimRow {
    pub n: u32,
    pub heap: u32,
    pub second_player_wins: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingEntry {
    pub turns: String,
    pub certificate: Option<TilingCertificate>,
    pub verified: bool,
}

/// What a checker found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Winner {
        n: u32,
        winner: Player,
        grundy: u32,
    },
    WinnerTable {
        rows: Vec<WinnerRow>,
    },
    Strategy {
        strategy: StrategyName,
        seat: Seat,
        checked: Vec<u32>,
        /// Rows where the strategy can be beaten.
        losing: Vec<u32>,
    },
    /// A row where the assertion fails, with the winning opening and the
    /// position it leaves.
    Counterexample {
        n: u32,
        winner: Player,
        opening: Option<u32>,
        board: BoardPosition,
        reply_available: bool,
    },
    /// The assertion held on every row searched.
    NoCounterexample {
        search_max: u32,
    },
    NimTable {
        rows: Vec<NimRow>,
    },
    Count {
        sides: usize,
        equivalence: Equivalence,
        count: usize,
        classes: Vec<String>,
        orientation_preserving: usize,
    },
    /// A polygon deciding the claim.
    Polygon {
        polygon: PolygonExport,
    },
    /// Every polygon of the family was checked.
    Checked {
        sides: usize,
        polygons: Vec<String>,
    },
    Tilings {
        entries: Vec<TilingEntry>,
    },
    RightAngles {
        steps: String,
        count_90: usize,
        count_270: usize,
    },
}

impl Evidence {
    /// One-line summary for tables.
    pub fn summary(&self) -> String {
        match self {
            Evidence::Winner { n, winner, grundy } => format!("n={n}: {winner} wins (g={grundy})"),
            Evidence::WinnerTable { rows } => {
                let computed: String = rows
                    .iter()
                    .map(|r| r.computed.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let bad: Vec<u32> = rows
                    .iter()
                    .filter(|r| r.expected != r.computed)
                    .map(|r| r.n)
                    .collect();
                match (rows.first(), rows.last()) {
                    (Some(a), Some(b)) if bad.is_empty() => {
                        format!("n={}..{}: {computed}", a.n, b.n)
                    }
                    (Some(a), Some(b)) => {
                        format!("n={}..{}: {computed}; differs at n={bad:?}", a.n, b.n)
                    }
                    _ => "empty table".into(),
                }
            }
            Evidence::Strategy {
                checked, losing, ..
            } => match (checked.first(), checked.last()) {
                (Some(a), Some(b)) if losing.is_empty() => {
                    format!("wins for all {} rows n={a}..{b}", checked.len())
                }
                (Some(_), Some(_)) => format!("beaten at n={losing:?}"),
                _ => "no applicable rows".into(),
            },
            Evidence::Counterexample {
                n,
                winner,
                opening,
                board,
                reply_available,
            } => {
                let opening = opening.map_or("none".to_string(), |c| c.to_string());
                let reply = if *reply_available {
                    "replies exist"
                } else {
                    "no legal reply"
                };
                format!("n={n}: {winner} wins, opening {opening} leaves {board} ({reply})")
            }
            Evidence::NoCounterexample { search_max } => format!("holds for all n<={search_max}"),
            Evidence::NimTable { rows } => {
                let bad: Vec<u32> = rows
                    .iter()
                    .filter(|r| !r.second_player_wins)
                    .map(|r| r.n)
                    .collect();
                if bad.is_empty() {
                    format!("second-player win for all {} rows", rows.len())
                } else {
                    format!("first-player win at n={bad:?}")
                }
            }
            Evidence::Count {
                count,
                equivalence,
                orientation_preserving,
                ..
            } => {
                let eq = match equivalence {
                    Equivalence::Congruence => "up to congruence",
                    Equivalence::OrientationPreserving => "up to rotation",
                };
                format!("{count} polygons {eq} ({orientation_preserving} up to rotation)")
            }
            Evidence::Polygon { polygon } => format!(
                "{} ({} convex, {} reflex, {})",
                polygon.turns, polygon.convex_corners, polygon.reflex_corners, polygon.symmetry
            ),
            Evidence::Checked { sides, polygons } => {
                format!("checked all {} polygons with {sides} sides", polygons.len())
            }
            Evidence::Tilings { entries } => {
                let ok = entries.iter().filter(|e| e.verified).count();
                let kinds: BTreeMap<&str, usize> = entries
                    .iter()
                    .filter_map(|e| e.certificate.as_ref())
                    .fold(BTreeMap::new(), |mut m, c| {
                        *m.entry(c.kind()).or_default() += 1;
                        m
                    });
                let kinds: Vec<String> = kinds.iter().map(|(k, v)| format!("{v} {k}")).collect();
                format!("{ok}/{} certified ({})", entries.len(), kinds.join(", "))
            }
            Evidence::RightAngles {
                count_90,
                count_270,
                ..
            } => format!("{count_90} of 90°, {count_270} of 270°"),
        }
    }
}

struct Outcome {
    verdict: bool,
    evidence: Evidence,
    diagnostics: Option<String>,
}

impl Outcome {
    fn new(verdict: bool, evidence: Evidence) -> Self {
        Outcome {
            verdict,
            evidence,
            diagnostics: None,
        }
    }
}

/// Families enumerated once and shared between claims.
struct Families(BTreeMap<usize, Result<(FamilyCensus, Vec<Polygon>), String>>);

impl Families {
    fn build(claims: &[Claim]) -> Self {
        let sides: BTreeSet<usize> = claims
            .iter()
            .filter_map(|c| family_sides(&c.check))
            .collect();
        let computed = exec::map_collect(&sides.into_iter().collect::<Vec<_>>(), |&n| {
            let family = if n > MAX_SIDES {
                Err(format!("side count {n} exceeds the limit {MAX_SIDES}"))
            } else {
                enumerate_census(n)
                    .map_err(|e| e.to_string())
                    .and_then(|census| {
                        let polygons: Result<Vec<Polygon>, _> =
                            census.classes.iter().map(|c| validate(c.word())).collect();
                        polygons.map(|p| (census, p)).map_err(|e| e.to_string())
                    })
            };
            (n, family)
        });
        Families(computed.into_iter().collect())
    }

    fn get(&self, sides: usize) -> Result<&(FamilyCensus, Vec<Polygon>), String> {
        match self.0.get(&sides) {
            Some(Ok(f)) => Ok(f),
            Some(Err(e)) => Err(e.clone()),
            None => Err(format!("family with {sides} sides was not enumerated")),
        }
    }
}

fn family_sides(check: &Check) -> Option<usize> {
    match check {
        Check::PolygonCountIs { sides, .. }
        | Check::AllPolygonsSatisfy { sides, .. }
        | Check::ExistsPolygonSatisfying { sides, .. }
        | Check::AllPolygonsTile { sides, .. } => Some(*sides),
        _ => None,
    }
}

fn check_row(n: u32) -> Result<(), String> {
    if n > MAX_BOARD_LEN {
        return Err(format!(
            "row length {n} exceeds the board limit {MAX_BOARD_LEN}"
        ));
    }
    Ok(())
}

fn check_limit(name: &str, value: u32, limit: u32) -> Result<(), String> {
    if value > limit {
        return Err(format!("{name} {value} exceeds the limit {limit}"));
    }
    Ok(())
}

fn winner_is(w: &WinnerIs) -> Result<Outcome, String> {
    match w {
        WinnerIs::Single {
            n,
            winner: expected,
        } => {
            check_row(*n)?;
            let computed = winner(*n as usize);
            let evidence = Evidence::Winner {
                n: *n,
                winner: computed,
                grundy: nim_heap_equivalent(*n as usize),
            };
            Ok(Outcome::new(computed == *expected, evidence))
        }
        WinnerIs::Table { start, winners } => {
            let end = start + winners.len() as u32;
            check_row(end.saturating_sub(1))?;
            let rows: Vec<WinnerRow> = winners
                .iter()
                .zip(*start..end)
                .map(|(&expected, n)| WinnerRow {
                    n,
                    expected,
                    computed: winner(n as usize),
                    grundy: nim_heap_equivalent(n as usize),
                })
                .collect();
            let holds = rows.iter().all(|r| r.expected == r.computed);
            Ok(Outcome::new(holds, Evidence::WinnerTable { rows }))
        }
    }
}

fn strategy_wins(strategy: StrategyName, seat: Seat, max_n: u32) -> Result<Outcome, String> {
    check_limit("max_n", max_n, MAX_STRATEGY_N)?;
    let rows: Vec<u32> = match strategy {
        StrategyName::Mirror => (1..=max_n).step_by(2).collect(),
        StrategyName::LowestLegal => (1..=max_n).collect(),
    };
    let results = exec::map_collect(&rows, |&n| match strategy {
        StrategyName::Mirror => mirror_strategy(n).and_then(|s| verify_strategy(&s, n, seat)),
        StrategyName::LowestLegal => verify_strategy(&LowestLegalStrategy, n, seat),
    });
    let mut losing = Vec::new();
    for (&n, r) in rows.iter().zip(results) {
        if !r.map_err(|e| e.to_string())? {
            losing.push(n);
        }
    }
    Ok(Outcome::new(
        losing.is_empty(),
        Evidence::Strategy {
            strategy,
            seat,
            checked: rows,
            losing,
        },
    ))
}

fn assertion_holds(a: GameAssertion, n: u32) -> bool {
    match a {
        GameAssertion::WinnerForParity { parity, winner: w } => {
            !parity.matches(n) || winner(n as usize) == w
        }
    }
}

fn counterexample(n: u32) -> Result<Evidence, String> {
    let board = BoardPosition::new(n).map_err(|e| e.to_string())?;
    let opening = optimal_move(&board);
    let board = match opening {
        Some(cell) => board.apply_move(cell).map_err(|e| e.to_string())?,
        None => board,
    };
    Ok(Evidence::Counterexample {
        n,
        winner: winner(n as usize),
        opening,
        reply_available: board.has_legal_move(),
        board,
    })
}

fn falsify(assertion: GameAssertion, nominated: u32, search_max: u32) -> Result<Outcome, String> {
    check_row(nominated)?;
    check_row(search_max)?;
    if !assertion_holds(assertion, nominated) {
        return Ok(Outcome::new(false, counterexample(nominated)?));
    }
    match (1..=search_max).find(|&n| !assertion_holds(assertion, n)) {
        Some(n) => Ok(Outcome {
            verdict: false,
            evidence: counterexample(n)?,
            diagnostics: Some(format!(
                "nominated n={nominated} is not a counterexample; least one is n={n}"
            )),
        }),
        None => Ok(Outcome::new(
            true,
            Evidence::NoCounterexample { search_max },
        )),
    }
}

fn nim_equivalence(max_n: u32) -> Result<Outcome, String> {
    check_limit("max_n", max_n, MAX_NIM_N)?;
    let ns: Vec<u32> = (0..=max_n).collect();
    let rows = exec::map_collect(&ns, |&n| {
        let heap = nim_heap_equivalent(n as usize);
        NimRow {
            n,
            heap,
            second_player_wins: compound_is_second_player_win(n, heap),
        }
    });
    let holds = rows.iter().all(|r| r.second_player_wins);
    Ok(Outcome::new(holds, Evidence::NimTable { rows }))
}

fn property_holds(p: &Polygon, property: PolygonProperty) -> bool {
    let (convex, reflex) = p.right_angle_count();
    match property {
        PolygonProperty::EvenConvexCorners => convex % 2 == 0,
        PolygonProperty::ConvexCorners(k) => convex == k,
        PolygonProperty::ReflexCorners(k) => reflex == k,
        PolygonProperty::Convex => p.is_convex(),
        PolygonProperty::Alternating => p.is_alternating(),
        PolygonProperty::Symmetric => !p.symmetry_group().is_trivial(),
        PolygonProperty::TrivialSymmetry => p.symmetry_group().is_trivial(),
        PolygonProperty::UnitSquareDecomposition => {
            let cells = p.rasterize();
            let distinct: BTreeSet<_> = cells.iter().collect();
            distinct.len() == cells.len() && cells.len() as u64 == p.area()
        }
    }
}

fn checked(sides: usize, polygons: &[Polygon]) -> Evidence {
    Evidence::Checked {
        sides,
        polygons: polygons.iter().map(|p| p.turns().to_string()).collect(),
    }
}

fn polygons_satisfy(
    polygons: &[Polygon],
    sides: usize,
    property: PolygonProperty,
    universal: bool,
) -> Outcome {
    let decisive = polygons
        .iter()
        .find(|p| property_holds(p, property) != universal);
    match (decisive, universal) {
        (Some(p), true) => Outcome::new(
            false,
            Evidence::Polygon {
                polygon: p.export(),
            },
        ),
        (Some(p), false) => Outcome::new(
            true,
            Evidence::Polygon {
                polygon: p.export(),
            },
        ),
        (None, universal) => Outcome::new(universal, checked(sides, polygons)),
    }
}

fn all_tile(polygons: &[Polygon], max_dim: usize) -> Result<Outcome, String> {
    check_limit("max_dim", max_dim as u32, MAX_TORUS_DIM as u32)?;
    let entries = exec::map_collect(polygons, |p| {
        let certificate = tile_any(p, max_dim);
        let verified = certificate.as_ref().is_some_and(|c| c.verify(p));
        TilingEntry {
            turns: p.turns().to_string(),
            certificate,
            verified,
        }
    });
    let failed: Vec<&str> = entries
        .iter()
        .filter(|e| !e.verified)
        .map(|e| e.turns.as_str())
        .collect();
    if failed.is_empty() {
        return Ok(Outcome::new(true, Evidence::Tilings { entries }));
    }
    // no certificate within bounds proves nothing either way
    Err(format!(
        "no certificate within max_dim {max_dim} for {}",
        failed.join(", ")
    ))
}

fn evaluate(check: &Check, families: &Families) -> Result<Outcome, String> {
    match check {
        Check::WinnerIs(w) => winner_is(w),
        Check::StrategyWins {
            strategy,
            seat,
            max_n,
        } => strategy_wins(*strategy, *seat, *max_n),
        Check::ClaimIsFalseWithCounterexample {
            assertion,
            counterexample,
            search_max,
        } => falsify(*assertion, *counterexample, *search_max),
        Check::NimEquivalence { max_n } => nim_equivalence(*max_n),
        Check::PolygonCountIs {
            sides,
            count,
            equivalence,
        } => {
            let (census, _) = families.get(*sides)?;
            let found = match equivalence {
                Equivalence::Congruence => census.classes.len(),
                Equivalence::OrientationPreserving => census.orientation_preserving,
            };
            let evidence = Evidence::Count {
                sides: *sides,
                equivalence: *equivalence,
                count: found,
                classes: census
                    .classes
                    .iter()
                    .map(|c| c.word().to_string())
                    .collect(),
                orientation_preserving: census.orientation_preserving,
            };
            Ok(Outcome::new(found == *count, evidence))
        }
        Check::AllPolygonsSatisfy { sides, property } => {
            let (_, polygons) = families.get(*sides)?;
            Ok(polygons_satisfy(polygons, *sides, *property, true))
        }
        Check::ExistsPolygonSatisfying { sides, property } => {
            let (_, polygons) = families.get(*sides)?;
            Ok(polygons_satisfy(polygons, *sides, *property, false))
        }
        Check::AllPolygonsTile { sides, max_dim } => {
            let (_, polygons) = families.get(*sides)?;
            all_tile(polygons, *max_dim)
        }
        Check::BoundaryRightAngles { steps, count_90 } => {
            let word: StepWord = steps
                .parse()
                .map_err(|e: crate::poly::PolyError| e.to_string())?;
            let (c90, c270) = general_right_angle_count(&word).map_err(|e| e.to_string())?;
            let evidence = Evidence::RightAngles {
                steps: steps.clone(),
                count_90: c90,
                count_270: c270,
            };
            Ok(Outcome::new(c90 == *count_90, evidence))
        }
    }
}

fn run_one(claim: &Claim, families: &Families, timings: bool) -> ClaimResult {
    let start = Instant::now();
    let outcome = evaluate(&claim.check, families);
    let runtime_ms = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
    let (verdict, evidence, diagnostics) = match outcome {
        Ok(o) => (Verdict::from(o.verdict), Some(o.evidence), o.diagnostics),
        Err(e) => (Verdict::Unknown, None, Some(e)),
    };
    let status = match verdict {
        Verdict::Unknown => Status::Unknown,
        v if v == Verdict::from(claim.expected_verdict) => Status::Pass,
        _ => Status::Fail,
    };
    ClaimResult {
        id: claim.id.clone(),
        source: claim.source.clone(),
        statement: claim.statement.clone(),
        checker: claim.check.name().to_string(),
        expected_verdict: claim.expected_verdict,
        verdict,
        status,
        evidence,
        diagnostics,
        runtime_ms,
    }
}

/// Orders ids by prefix and then by trailing number, so `POLY-2` sorts
/// before `POLY-10`.
fn id_key(id: &str) -> (&str, u64, &str) {
    let digits = id.bytes().rev().take_while(u8::is_ascii_digit).count();
    let (prefix, number) = id.split_at(id.len() - digits);
    match number.parse::<u64>() {
        Ok(n) if digits <= 18 => (prefix, n, id),
        _ => (id, 0, id),
    }
}

/// Evaluates every claim, in parallel, and assembles the report in id order.
/// Runtimes are recorded only when `timings` is set, so that reports are
/// reproducible.
pub fn run_claims(claims: &[Claim], timings: bool) -> ClaimReport {
    let families = Families::build(claims);
    let mut results = exec::map_collect(claims, |c| run_one(c, &families, timings));
    results.sort_by(|a, b| id_key(&a.id).cmp(&id_key(&b.id)));
    ClaimReport {
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: report_timestamp(),
        summary: Summary::of(&results),
        results,
    }
}

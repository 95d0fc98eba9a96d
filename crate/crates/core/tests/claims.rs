use spatial_claims::claims::{
    builtin_claims, load_claims, run_claims, Check, Claim, ClaimReport, Evidence, Status, Verdict,
    WinnerIs,
};
use spatial_claims::game::{grundy_sequence, Player};

fn builtin_report() -> ClaimReport {
    run_claims(&builtin_claims(), false)
}

#[test]
fn builtin_registry_reproduces() {
    let report = builtin_report();
    for r in &report.results {
        assert_eq!(
            r.status,
            Status::Pass,
            "{} -> {:?} {:?}",
            r.id,
            r.verdict,
            r.diagnostics
        );
    }
    assert_eq!(report.summary.total, builtin_claims().len());
    assert!(report.summary.all_pass());
}

#[test]
fn false_verdicts_carry_witnesses() {
    let report = builtin_report();
    for r in report
        .results
        .iter()
        .filter(|r| r.verdict == Verdict::False)
    {
        let witness = matches!(
            r.evidence,
            Some(
                Evidence::Counterexample { .. } | Evidence::Polygon { .. } | Evidence::Count { .. }
            )
        );
        assert!(witness, "{} has no witness: {:?}", r.id, r.evidence);
    }
    let game3 = report.results.iter().find(|r| r.id == "GAME-3").unwrap();
    let Some(Evidence::Counterexample {
        n,
        board,
        reply_available,
        ..
    }) = &game3.evidence
    else {
        panic!("GAME-3 evidence: {:?}", game3.evidence);
    };
    assert_eq!(
        (*n, board.length(), board.occupied(), *reply_available),
        (2, 2, vec![1], false)
    );
    let poly8 = report.results.iter().find(|r| r.id == "POLY-8").unwrap();
    assert_eq!(poly8.verdict, Verdict::False);
    assert!(matches!(
        poly8.evidence,
        Some(Evidence::Count { count: 7, .. })
    ));
}

#[test]
fn reports_are_ordered_and_repeatable() {
    let mut shuffled = builtin_claims();
    shuffled.reverse();
    let a = builtin_report();
    let b = run_claims(&shuffled, false);
    assert_eq!(a.results, b.results);
    let ids: Vec<&str> = a.results.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(&ids[..2], ["GAME-1", "GAME-2"]);
    assert_eq!(*ids.last().unwrap(), "POLY-11");
    assert!(a.results.iter().all(|r| r.runtime_ms.is_none()));
}

#[test]
fn report_json_round_trips() {
    let report = builtin_report();
    let back: ClaimReport = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(back, report);
    let md = report.to_markdown();
    assert_eq!(
        md.lines()
            .filter(|l| l.starts_with("| GAME-") || l.starts_with("| POLY-"))
            .count(),
        report.results.len()
    );
}

#[test]
fn user_winner_claims_follow_the_grundy_table() {
    let g = grundy_sequence(30);
    let claims: Vec<Claim> = (0..=30u32)
        .map(|n| Claim {
            id: format!("U-{n}"),
            source: "user".into(),
            statement: format!("A wins row {n}"),
            check: Check::WinnerIs(WinnerIs::Single {
                n,
                winner: Player::A,
            }),
            expected_verdict: true,
        })
        .collect();
    let text = serde_json::to_string(&claims).unwrap();
    let loaded = load_claims(&text).unwrap();
    assert_eq!(loaded, claims);
    let report = run_claims(&loaded, false);
    for (r, n) in report.results.iter().zip(0..) {
        assert_eq!(r.verdict == Verdict::True, g[n] != 0, "row {n}");
    }
}

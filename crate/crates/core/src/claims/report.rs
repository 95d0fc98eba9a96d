use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::run::Evidence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    /// The checker could not decide, e.g. a bounded search came up empty.
    Unknown,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Computed verdict compared with the expected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub source: String,
    pub statement: String,
    pub checker: String,
    pub expected_verdict: bool,
    pub verdict: Verdict,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

impl Summary {
    pub fn of(results: &[ClaimResult]) -> Self {
        let count = |s: Status| results.iter().filter(|r| r.status == s).count();
        Summary {
            total: results.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            unknown: count(Status::Unknown),
        }
    }

    /// No mismatches and nothing undecided.
    pub fn all_pass(&self) -> bool {
        self.pass == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub engine_version: String,
    pub timestamp: String,
    pub summary: Summary,
    pub results: Vec<ClaimResult>,
}

/// RFC 3339 time of the run, taken from `SOURCE_DATE_EPOCH` when set so that
/// reports can be reproduced byte for byte.
pub(crate) fn report_timestamp() -> String {
    let fixed = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok());
    let time = match fixed.and_then(|secs| chrono::DateTime::from_timestamp(secs, 0)) {
        Some(t) => t,
        None => chrono::Utc::now(),
    };
    time.to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "# Claims report\n");
        let _ = writeln!(
            out,
            "Engine {} at {}.\n",
            self.engine_version, self.timestamp
        );
        let _ = writeln!(
            out,
            "{} claims: {} pass, {} fail, {} unknown.\n",
            s.total, s.pass, s.fail, s.unknown
        );
        let timed = self.results.iter().any(|r| r.runtime_ms.is_some());
        out.push_str("| id | source | statement | expected | verdict | status | evidence |");
        out.push_str(if timed { " ms |\n" } else { "\n" });
        out.push_str("|---|---|---|---|---|---|---|");
        out.push_str(if timed { "---:|\n" } else { "\n" });
        for r in &self.results {
            let mut evidence = r
                .evidence
                .as_ref()
                .map(Evidence::summary)
                .unwrap_or_default();
            if let Some(d) = &r.diagnostics {
                if !evidence.is_empty() {
                    evidence.push_str("; ");
                }
                evidence.push_str(d);
            }
            let _ = write!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                cell(&r.id),
                cell(&r.source),
                cell(&r.statement),
                r.expected_verdict,
                r.verdict,
                r.status,
                cell(&evidence)
            );
            match r.runtime_ms {
                Some(ms) if timed => {
                    let _ = writeln!(out, " {ms:.1} |");
                }
                _ if timed => out.push_str(" |\n"),
                _ => out.push('\n'),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn markdown_escapes_pipes() {
        let report = ClaimReport {
            engine_version: "0".into(),
            timestamp: "t".into(),
            summary: Summary {
                total: 1,
                pass: 1,
                fail: 0,
                unknown: 0,
            },
            results: vec![ClaimResult {
                id: "X".into(),
                source: "a|b".into(),
                statement: "s".into(),
                checker: "winner_is".into(),
                expected_verdict: true,
                verdict: Verdict::True,
                status: Status::Pass,
                evidence: None,
                diagnostics: None,
                runtime_ms: None,
            }],
        };
        let md = report.to_markdown();
        assert!(md.contains("| X | a\\|b | s | true | true | pass |  |"));
        assert!(report.summary.all_pass());
    }
}

use std::collections::BTreeSet;

use serde_json::Value;

use super::{Claim, CHECKERS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClaimLoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("claim file must be a JSON array of claim objects")]
    NotAnArray,
    #[error("claim #{index}: unknown checker {checker:?}")]
    UnknownChecker { index: usize, checker: String },
    #[error("claim #{index} ({id}): {message}")]
    ParameterType {
        index: usize,
        id: String,
        message: String,
    },
    #[error("duplicate claim id {0:?}")]
    DuplicateId(String),
}

/// Parses a JSON array of claims. Checker names are checked against the
/// registry before the parameters are type-checked.
pub fn load_claims(content: &str) -> Result<Vec<Claim>, ClaimLoadError> {
    let value: Value = serde_json::from_str(content).map_err(|e| ClaimLoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Array(items) = value else {
        return Err(ClaimLoadError::NotAnArray);
    };
    let mut seen = BTreeSet::new();
    let mut claims = Vec::with_capacity(items.len());
    for (index, item) in items.into_iter().enumerate() {
        let id = item
            .get("id")
            .and_then(Value::as_str)
            .unwrap_or("?")
            .to_string();
        match item.get("checker") {
            Some(Value::String(name)) if !CHECKERS.contains(&name.as_str()) => {
                return Err(ClaimLoadError::UnknownChecker {
                    index,
                    checker: name.clone(),
                });
            }
            Some(Value::String(_)) => {}
            _ => {
                return Err(ClaimLoadError::ParameterType {
                    index,
                    id,
                    message: "missing checker name".into(),
                });
            }
        }
        let claim: Claim =
            serde_json::from_value(item).map_err(|e| ClaimLoadError::ParameterType {
                index,
                id,
                message: e.to_string(),
            })?;
        if !seen.insert(claim.id.clone()) {
            return Err(ClaimLoadError::DuplicateId(claim.id));
        }
        claims.push(claim);
    }
    Ok(claims)
}

/// `base` followed by `extra`, rejecting ids present in both.
pub fn merge_claims(base: Vec<Claim>, extra: Vec<Claim>) -> Result<Vec<Claim>, ClaimLoadError> {
    let ids: BTreeSet<String> = base.iter().map(|c| c.id.clone()).collect();
    if let Some(dup) = extra.iter().find(|c| ids.contains(&c.id)) {
        return Err(ClaimLoadError::DuplicateId(dup.id.clone()));
    }
    Ok(base.into_iter().chain(extra).collect())
}

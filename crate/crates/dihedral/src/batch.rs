//! JSON-lines batch processing.
//!
//! Each input line is `{"id": ..., "type": "presentation" | "pd", "payload": ...}`.
//! Output has one object per non-blank input line, in input order, followed
//! by a summary line. A bad line yields an error object and never stops the
//! stream.

use anyhow::{anyhow, bail, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands;
use crate::input::{parse_group, PresentationJson};
use crate::parallel::pool;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchOutcome {
    pub id: Value,
    #[serde(rename = "type")]
    pub kind: String,
    pub verdict: String,
    pub evidence: Value,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchError {
    pub id: Value,
    pub error: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub lines: usize,
    pub yes: usize,
    pub no: usize,
    pub errors: usize,
}

#[derive(Serialize)]
struct SummaryLine {
    summary: Summary,
}

fn process(line: &str, cap: usize) -> Result<BatchOutcome, BatchError> {
    let value: Value = serde_json::from_str(line).map_err(|e| BatchError {
        id: Value::Null,
        error: format!("malformed JSON: {e}"),
    })?;
    let id = value.get("id").cloned().unwrap_or(Value::Null);
    evaluate(&value, cap).map_err(|e| BatchError {
        id: id.clone(),
        error: format!("{e:#}"),
    })
}

fn evaluate(value: &Value, cap: usize) -> Result<BatchOutcome> {
    let id = value.get("id").cloned().ok_or_else(|| anyhow!("missing id"))?;
    let kind = value
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("missing type"))?;
    let payload = value.get("payload").ok_or_else(|| anyhow!("missing payload"))?;
    match kind {
        "presentation" => {
            let p = match payload {
                Value::String(text) => parse_group(text)?,
                other => serde_json::from_value::<PresentationJson>(other.clone())?.to_presentation()?,
            };
            let report = commands::decide(&p, cap, 1, None)?;
            Ok(BatchOutcome {
                id,
                kind: kind.into(),
                verdict: report.verdict.clone(),
                evidence: serde_json::to_value(&report.evidence)?,
                detail: serde_json::to_value(&report.surjection)?,
            })
        }
        "pd" => {
            let text = payload.as_str().ok_or_else(|| anyhow!("pd payload must be a string"))?;
            let report = commands::link(text, cap, None)?;
            Ok(BatchOutcome {
                id,
                kind: kind.into(),
                verdict: report.verdict.clone(),
                evidence: serde_json::to_value(&report.classes)?,
                detail: serde_json::to_value(&report)?,
            })
        }
        other => bail!("unknown type {other:?}"),
    }
}

/// Processes every line with up to `jobs` worker threads and returns the
/// complete output text.
pub fn run(input: &str, cap: usize, jobs: usize) -> Result<(String, Summary)> {
    let lines: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<Result<BatchOutcome, BatchError>> =
        pool(jobs)?.install(|| lines.par_iter().map(|l| process(l, cap)).collect());

    let mut out = String::new();
    let mut summary = Summary {
        lines: lines.len(),
        ..Summary::default()
    };
    for r in &results {
        let text = match r {
            Ok(o) => {
                if o.verdict == "YES" {
                    summary.yes += 1;
                } else {
                    summary.no += 1;
                }
                serde_json::to_string(o)?
            }
            Err(e) => {
                summary.errors += 1;
                serde_json::to_string(e)?
            }
        };
        out.push_str(&text);
        out.push('\n');
    }
    out.push_str(&serde_json::to_string(&SummaryLine { summary })?);
    out.push('\n');
    Ok((out, summary))
}

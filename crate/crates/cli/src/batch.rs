//! JSONL batch input: one flat object per line with keys `f`, `r`, `s`,
//! `gamma` (strings or numbers). Blank lines are skipped.

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use crate::commands::{CliError, GduaInput};
use crate::report::Report;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    f: Option<Value>,
    r: Value,
    s: Value,
    gamma: Option<Value>,
}

fn text(v: Option<&Value>, default: &str) -> Result<String, String> {
    match v {
        None | Some(Value::Null) => Ok(default.into()),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(Value::Number(n)) => Ok(n.to_string()),
        Some(other) => Err(format!("expected a string or number, got {other}")),
    }
}

fn parse_record(line_no: usize, line: &str) -> Result<GduaInput, CliError> {
    let usage = |m: String| CliError::Usage(format!("line {line_no}: {m}"));
    let rec: Record = serde_json::from_str(line).map_err(|e| usage(e.to_string()))?;
    Ok(GduaInput {
        f: text(rec.f.as_ref(), "0").map_err(usage)?,
        r: text(Some(&rec.r), "").map_err(usage)?,
        s: text(Some(&rec.s), "").map_err(usage)?,
        gamma: text(rec.gamma.as_ref(), "0").map_err(usage)?,
    })
}

/// Runs `cmd` on every record, in parallel, returning results in input
/// order.
pub fn run_batch<F>(contents: &str, cmd: F) -> Vec<Result<Report, CliError>>
where
    F: Fn(&GduaInput) -> Result<Report, CliError> + Sync,
{
    let lines: Vec<(usize, &str)> = contents
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    lines
        .par_iter()
        .map(|&(no, line)| parse_record(no, line).and_then(|input| cmd(&input)))
        .collect()
}

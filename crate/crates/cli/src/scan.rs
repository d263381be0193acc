use std::path::{Path, PathBuf};

use clap::ValueEnum;
use idemgen::construct::{parse_manifest, ManifestEntry};
use idemgen::props::evaluate;
use idemgen::{Budget, Error};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::{json, resolve_budget, EXIT_BUDGET, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Diff,
    Budget,
    Error,
}

/// One recomputed expectation. Timings are deliberately absent so that
/// reports do not depend on scheduling.
#[derive(Debug, Serialize)]
struct Row {
    line: usize,
    name: String,
    degree: usize,
    source: String,
    property: String,
    expected: bool,
    actual: Option<bool>,
    status: Status,
    error: Option<String>,
}

fn failure_status(e: &Error) -> Status {
    if e.is_budget() {
        Status::Budget
    } else {
        Status::Error
    }
}

fn scan_entry(entry: &ManifestEntry, budget: &Budget) -> Vec<Row> {
    let row = |property: String, expected: bool, result: Result<bool, Error>| {
        let (actual, status, error) = match result {
            Ok(v) if v == expected => (Some(v), Status::Ok, None),
            Ok(v) => (Some(v), Status::Diff, None),
            Err(e) => (None, failure_status(&e), Some(e.to_string())),
        };
        Row {
            line: entry.line,
            name: entry.name.clone(),
            degree: entry.degree,
            source: entry.source.to_string(),
            property,
            expected,
            actual,
            status,
            error,
        }
    };
    match entry.load() {
        Ok(group) => entry
            .expected
            .iter()
            .map(|x| row(x.property.to_string(), x.verdict, evaluate(&group, x.property, budget)))
            .collect(),
        Err(e) => entry
            .expected
            .iter()
            .map(|x| row(x.property.to_string(), x.verdict, Err(e.clone())))
            .collect(),
    }
}

fn render_csv(rows: &[Row]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn count(rows: &[Row], s: Status) -> usize {
    rows.iter().filter(|r| r.status == s).count()
}

pub fn run(path: &PathBuf, jobs: usize, format: Format, budget: Option<usize>) -> u8 {
    let budget = match resolve_budget(budget) {
        Ok(b) => b,
        Err(m) => {
            eprintln!("error: {m}");
            return EXIT_INPUT;
        }
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let base = path.parent().unwrap_or(Path::new("."));
    let entries = match parse_manifest(&text, base) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let rows: Vec<Row> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| scan_entry(e, &budget))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });

    for r in rows.iter().filter(|r| r.status != Status::Ok) {
        let actual = r.actual.map_or("-".to_string(), |v| v.to_string());
        eprintln!(
            "{} line {} {} {}: expected {} got {}{}",
            serde_json::to_value(r.status).unwrap().as_str().unwrap().to_uppercase(),
            r.line,
            r.name,
            r.property,
            r.expected,
            actual,
            r.error.as_ref().map_or(String::new(), |e| format!(" ({e})")),
        );
    }

    let diffs = count(&rows, Status::Diff);
    let budgets = count(&rows, Status::Budget);
    let errors = count(&rows, Status::Error);
    let out = match format {
        Format::Json => {
            let report = json!({
                "schema_version": crate::SCHEMA_VERSION,
                "manifest": path.display().to_string(),
                "budget": json::budget(&budget),
                "entries": entries.len(),
                "checks": rows.len(),
                "mismatches": diffs,
                "budget_exceeded": budgets,
                "errors": errors,
                "rows": rows,
            });
            Ok(serde_json::to_string_pretty(&report).expect("serialisable") + "\n")
        }
        Format::Csv => render_csv(&rows),
    };
    match out {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    }
    if diffs > 0 {
        EXIT_MISMATCH
    } else if budgets > 0 {
        EXIT_BUDGET
    } else if errors > 0 {
        EXIT_INPUT
    } else {
        EXIT_OK
    }
}

//! JSON case files, their dispatch onto the `ialex` algebra, canonical
//! reports and the corpus runner behind the `ialex` binary.

mod render;
mod report;
mod run;
pub mod schema;

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

pub use report::{Failure, Report, Status};
pub use run::{parse_case, run, run_str, run_value, Options};
pub use schema::Case;

/// Case files (`*.json`) of a directory in filename order.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let io = |e: std::io::Error| Failure::new("io", format!("{}: {e}", dir.display()), None);
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()).map_err(io))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

fn file_name(p: &Path) -> String {
    p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Every case of the directory with its own report, in filename order.
pub fn corpus_reports(dir: &Path, opts: &Options) -> Result<Vec<(String, Report)>, Failure> {
    Ok(corpus_files(dir)?
        .into_iter()
        .map(|path| {
            let name = file_name(&path);
            let report = match fs::read_to_string(&path) {
                Ok(text) => run_str(&text, opts),
                Err(e) => Report::error("unknown", Failure::new("io", e.to_string(), None)),
            };
            (name, report)
        })
        .collect())
}

/// Aggregate report with one summary row per case file. Fails if any case
/// does not pass; an empty directory passes.
pub fn corpus(dir: &Path, opts: &Options) -> Report {
    let reports = match corpus_reports(dir, opts) {
        Ok(r) => r,
        Err(f) => return Report::error("corpus", f),
    };
    summarize(&reports)
}

pub fn summarize(reports: &[(String, Report)]) -> Report {
    let mut rows = Vec::with_capacity(reports.len());
    let mut failures = Vec::new();
    for (file, r) in reports {
        let mut row = json!({ "file": file, "kind": r.kind, "status": r.status });
        if r.status != Status::Pass {
            let (code, message) = match &r.error {
                Some(f) => (f.code.clone(), f.message.clone()),
                None => ("fail".to_string(), "validation failed".to_string()),
            };
            row["code"] = json!(code);
            failures.push(json!({ "file": file, "code": code, "message": message }));
        }
        rows.push(row);
    }
    let passed = reports.len() - failures.len();
    let values = json!({ "cases": rows, "total": reports.len(), "passed": passed });
    Report {
        kind: "corpus".into(),
        status: if failures.is_empty() { Status::Pass } else { Status::Fail },
        values,
        certificates: (!failures.is_empty()).then_some(Value::Array(failures)),
        error: None,
    }
}

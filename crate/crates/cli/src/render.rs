//! Aligned plain-text rendering of reports.

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::report::Report;

const LEADING: [&str; 6] = ["file", "name", "degree", "p", "q", "kind"];

pub fn text(r: &Report) -> String {
    let mut out = String::new();
    let status = serde_json::to_value(r.status).expect("status serializes");
    let _ = writeln!(out, "kind: {}", r.kind);
    let _ = writeln!(out, "status: {}", scalar(&status));
    if let Some(f) = &r.error {
        let _ = write!(out, "error: {}: {}", f.code, f.message);
        if let Some(p) = &f.path {
            let _ = write!(out, " (at {p})");
        }
        out.push('\n');
    }
    if let Value::Object(m) = &r.values {
        for (k, v) in m {
            field(&mut out, k, v, 0);
        }
    }
    if let Some(c) = &r.certificates {
        field(&mut out, "certificates", c, 0);
    }
    out
}

fn field(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Array(items) if !items.is_empty() && items.iter().all(is_module) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, m) in items.iter().enumerate() {
                let _ = writeln!(out, "{pad}  {i}: {}", scalar(m));
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let _ = writeln!(out, "{pad}{key}:");
            table(out, items, indent + 2);
        }
        Value::Object(m) if module_text(m).is_none() => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in m {
                field(out, k, v, indent + 2);
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar(v));
        }
    }
}

fn is_module(v: &Value) -> bool {
    v.as_object().and_then(module_text).is_some()
}

/// Module literals print as `Γ^r ⊕ Γ/(p) ⊕ …`.
fn module_text(m: &Map<String, Value>) -> Option<String> {
    if m.len() != 2 {
        return None;
    }
    let free = m.get("free")?.as_u64()?;
    let torsion = m.get("torsion")?.as_array()?;
    let mut parts = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Γ".to_string()),
        r => parts.push(format!("Γ^{r}")),
    }
    for t in torsion {
        parts.push(format!("Γ/({})", t.as_str()?));
    }
    Some(if parts.is_empty() { "0".into() } else { parts.join(" ⊕ ") })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => module_text(m).unwrap_or_else(|| v.to_string()),
        _ => v.to_string(),
    }
}

fn table(out: &mut String, rows: &[Value], indent: usize) {
    let mut cols: Vec<String> = Vec::new();
    for row in rows {
        for k in row.as_object().into_iter().flat_map(Map::keys) {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols.sort_by_key(|c| (LEADING.iter().position(|l| l == c).unwrap_or(LEADING.len()), c.clone()));
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c).map_or_else(String::new, scalar)).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|r| r[j].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let pad = " ".repeat(indent);
    let mut line = |cells: Vec<&str>| {
        let mut s = pad.clone();
        for (j, cell) in cells.iter().enumerate() {
            s.push_str(cell);
            if j + 1 < cells.len() {
                s.push_str(&" ".repeat(widths[j] - cell.chars().count() + 2));
            }
        }
        let _ = writeln!(out, "{}", s.trim_end());
    };
    line(cols.iter().map(String::as_str).collect());
    for r in &cells {
        line(r.iter().map(String::as_str).collect());
    }
}

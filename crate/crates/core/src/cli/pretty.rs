use std::fmt::Write;

use serde_json::Value;

use super::run::{ReportDocument, Status};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_owned()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object()) => {
            let parts: Vec<String> = a.iter().map(scalar).collect::<Option<_>>()?;
            let line = format!("[{}]", parts.join(", "));
            (line.chars().count() <= 80).then_some(line)
        }
        _ => None,
    }
}

/// Renders `{lhs, rhs, passed}` on one line.
fn equality(v: &Value) -> Option<String> {
    let o = v.as_object()?;
    let passed = o.get("passed")?.as_bool()?;
    let lhs = scalar(o.get("lhs")?)?;
    let rhs = scalar(o.get("rhs")?)?;
    let rel = if passed { "=" } else { "≠" };
    let mut line = format!(
        "{lhs} {rel} {rhs}  {}",
        if passed { "ok" } else { "FAILED" }
    );
    for (k, x) in o
        .iter()
        .filter(|(k, _)| !matches!(k.as_str(), "lhs" | "rhs" | "passed"))
    {
        if let Some(s) = scalar(x) {
            let _ = write!(line, "  ({k}: {s})");
        }
    }
    Some(line)
}

/// Renders `{checked, passed}` on one line.
fn tally(v: &Value) -> Option<String> {
    let o = v.as_object()?;
    if o.len() != 2 {
        return None;
    }
    let checked = o.get("checked")?.as_u64()?;
    let passed = o.get("passed")?.as_u64()?;
    let mark = if checked == passed { "ok" } else { "FAILED" };
    Some(format!("{passed}/{checked} {mark}"))
}

fn inline(v: &Value) -> Option<String> {
    scalar(v).or_else(|| equality(v)).or_else(|| tally(v))
}

fn tree(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        tree(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}- #{}", i + 1);
                        tree(out, x, depth + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other).unwrap_or_default());
        }
    }
}

/// Human-readable rendering of a report.
pub fn render_pretty(report: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = write!(out, "gogkit {}", report.version);
    if let Some(s) = &report.suite {
        let _ = write!(out, ", {s} self-test");
    }
    out.push('\n');
    for e in &report.errors {
        let _ = writeln!(out, "error: {e}");
    }
    for r in &report.results {
        let status = match r.status {
            Status::Ok => "ok",
            Status::Failed => "FAILED",
            Status::Error => "ERROR",
        };
        let _ = writeln!(out, "\n[{}] {}: {status}", r.index + 1, r.task);
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  {e}");
        }
        if let Some(o) = &r.output {
            tree(&mut out, o, 1);
        }
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "\nsummary: {} tasks ({} ok, {} failed, {} errored); identities {}/{} passed",
        s.tasks,
        s.tasks_ok,
        s.tasks_failed,
        s.tasks_errored,
        s.identities_passed,
        s.identities_checked
    );
    out
}

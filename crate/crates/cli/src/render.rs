//! Plain-text rendering of a payload for `--text`.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Rows of objects become an aligned table.
fn table(out: &mut String, rows: &[Value]) {
    let Some(Value::Object(first)) = rows.first() else {
        let _ = writeln!(out, "  {}", rows.iter().map(scalar).collect::<Vec<_>>().join(" "));
        return;
    };
    let cols: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| scalar(&r[c.as_str()])).collect()).collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).max().unwrap_or(0).max(c.len()))
        .collect();
    let line = |vals: Vec<&str>| {
        vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect::<Vec<_>>().join("  ")
    };
    let _ = writeln!(out, "  {}", line(cols.iter().map(|c| c.as_str()).collect()).trim_end());
    for r in &cells {
        let _ = writeln!(out, "  {}", line(r.iter().map(String::as_str).collect()).trim_end());
    }
}

fn block(out: &mut String, prefix: &str, v: &Value) {
    let Value::Object(map) = v else {
        let _ = writeln!(out, "{prefix}{}", scalar(v));
        return;
    };
    let width = map.keys().map(|k| k.len() + prefix.len()).max().unwrap_or(0);
    for (k, val) in map {
        let key = format!("{prefix}{k}");
        match val {
            Value::Object(_) => block(out, &format!("{key}."), val),
            Value::Array(rows) if rows.iter().any(Value::is_object) => {
                let _ = writeln!(out, "{key}:");
                table(out, rows);
            }
            _ => {
                let _ = writeln!(out, "{key:<width$}  {}", scalar(val));
            }
        }
    }
}

pub fn text(status: &str, payload: &Value) -> String {
    let mut out = String::new();
    if status != "ok" {
        let _ = writeln!(out, "error");
    }
    block(&mut out, "", payload);
    out
}

//! Plain-text rendering of command output.

use serde_json::Value;

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write(&mut out, v, 0);
    out
}

fn is_matrix(v: &Value) -> bool {
    matches!(v, Value::Array(rows) if !rows.is_empty()
        && rows.iter().all(|r| matches!(r, Value::Array(c) if c.iter().all(Value::is_string))))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("({})", xs.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(xs) => !is_matrix(v) && xs.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn write(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if inline(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write(out, x, depth + 1);
                }
            }
        }
        Value::Array(rows) if is_matrix(v) => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.as_array().unwrap().iter().map(scalar).collect())
                .collect();
            let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
            for r in cells {
                let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(&format!("{pad}[ {} ]\n", line.join("  ")));
            }
        }
        Value::Array(xs) => {
            for x in xs {
                if inline(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write(out, x, depth + 1);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

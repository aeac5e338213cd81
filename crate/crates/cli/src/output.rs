//! Rendering JSON values as JSON, CSV or Markdown.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

pub fn render(value: &Value, format: Format) -> Result<String, String> {
    match format {
        Format::Json => serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => csv(value),
        Format::Markdown => Ok(markdown(value)),
    }
}

// Arrays of objects become one row per element; a single object is one row.
fn rows(value: &Value) -> Vec<&serde_json::Map<String, Value>> {
    match value {
        Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
        Value::Object(map) => vec![map],
        _ => Vec::new(),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv(value: &Value) -> Result<String, String> {
    let rows = rows(value);
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = rows.first() {
        w.write_record(first.keys()).map_err(|e| e.to_string())?;
        for r in &rows {
            w.write_record(first.keys().map(|k| r.get(k).map(cell).unwrap_or_default()))
                .map_err(|e| e.to_string())?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn markdown(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Array(_) => {
            let rows = rows(value);
            let Some(first) = rows.first() else {
                return out;
            };
            let keys: Vec<&String> = first.keys().collect();
            out += &format!("| {} |\n", keys.iter().map(|k| md_escape(k)).collect::<Vec<_>>().join(" | "));
            out += &format!("|{}\n", "---|".repeat(keys.len()));
            for r in rows {
                let cells: Vec<String> = keys.iter().map(|k| md_escape(&r.get(*k).map(cell).unwrap_or_default())).collect();
                out += &format!("| {} |\n", cells.join(" | "));
            }
        }
        Value::Object(map) => {
            out += "| field | value |\n|---|---|\n";
            for (k, v) in map {
                out += &format!("| {} | {} |\n", md_escape(k), md_escape(&cell(v)));
            }
        }
        other => out += &format!("{}\n", cell(other)),
    }
    out
}

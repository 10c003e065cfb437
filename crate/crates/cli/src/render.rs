//! Output envelope and its three encodings.
//!
//! `json` is the envelope itself. `csv` flattens it into `path,value` rows.
//! `pretty` is an indented view with matrices drawn as grids and lists of
//! flat records drawn as tables. All three carry the same scalars.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Envelope {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub warnings: Vec<String>,
}

impl Envelope {
    pub fn new(command: &str, input: Value) -> Self {
        Self {
            command: command.into(),
            input,
            result: Value::Null,
            certificates: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema_version".into(), SCHEMA_VERSION.into());
        obj.insert("command".into(), self.command.clone().into());
        obj.insert("input".into(), self.input.clone());
        obj.insert("result".into(), self.result.clone());
        obj.insert("certificates".into(), Value::Array(self.certificates.clone()));
        obj.insert(
            "warnings".into(),
            Value::Array(self.warnings.iter().cloned().map(Value::String).collect()),
        );
        Value::Object(obj)
    }

    pub fn render(&self, format: Format, color: bool) -> String {
        let value = self.to_value();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&value),
            Format::Pretty => render_pretty(&value, color),
        }
    }
}

/// Text of a scalar, as used by both csv and pretty output.
pub fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

/// Every scalar leaf with its dotted path. Empty containers produce a leaf
/// `[]` or `{}` so that they survive flattening.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |key: &str| {
            if prefix.is_empty() {
                key.to_string()
            } else {
                format!("{prefix}.{key}")
            }
        };
        match v {
            Value::Object(map) if map.is_empty() => out.push((prefix.into(), "{}".into())),
            Value::Array(items) if items.is_empty() => out.push((prefix.into(), "[]".into())),
            Value::Object(map) => map.iter().for_each(|(k, v)| walk(&join(k), v, out)),
            Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| walk(&join(&i.to_string()), v, out)),
            scalar => out.push((prefix.into(), scalar_text(scalar))),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(value: &Value) -> String {
    let mut out = String::from("path,value\n");
    for (path, text) in flatten(value) {
        let _ = writeln!(out, "{},{}", csv_field(&path), csv_field(&text));
    }
    out
}

fn as_matrix(v: &Value) -> Option<Vec<Vec<String>>> {
    let obj = v.as_object()?;
    if obj.len() != 2 || !obj.contains_key("n") {
        return None;
    }
    obj.get("rows")?
        .as_array()?
        .iter()
        .map(|row| row.as_array().map(|r| r.iter().map(scalar_text).collect()))
        .collect()
}

fn is_scalar(v: &Value) -> bool {
    !v.is_object() && !v.is_array()
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.iter().all(is_scalar) => {
            Some(format!("[{}]", items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")))
        }
        s if is_scalar(s) => Some(scalar_text(s)),
        _ => None,
    }
}

// Arrays of objects whose fields are all inline-able, sharing one key set.
fn as_table(items: &[Value]) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let first = items.first()?.as_object()?;
    let header: Vec<String> = first.keys().cloned().collect();
    let mut rows = Vec::with_capacity(items.len());
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != header.len() {
            return None;
        }
        let row = header
            .iter()
            .map(|k| obj.get(k).and_then(inline))
            .collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    Some((header, rows))
}

fn grid(out: &mut String, indent: &str, header: Option<&[String]>, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).chain(header.map(<[_]>::len)).max().unwrap_or(0);
    let mut width = vec![0; cols];
    for row in header.into_iter().map(<[_]>::to_vec).chain(rows.iter().cloned()) {
        for (w, cell) in width.iter_mut().zip(&row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[String]| {
        row.iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    if let Some(h) = header {
        let _ = writeln!(out, "{indent}{}", line(h));
    }
    for row in rows {
        let _ = writeln!(out, "{indent}{}", line(row));
    }
}

fn render_pretty(value: &Value, color: bool) -> String {
    fn key(k: &str, color: bool) -> String {
        if color {
            format!("\x1b[1m{k}\x1b[0m")
        } else {
            k.to_string()
        }
    }
    fn walk(out: &mut String, depth: usize, label: &str, v: &Value, color: bool) {
        let indent = "  ".repeat(depth);
        if let Some(text) = inline(v) {
            let _ = writeln!(out, "{indent}{}: {text}", key(label, color));
            return;
        }
        if let Some(rows) = as_matrix(v) {
            let _ = writeln!(out, "{indent}{}: {n}x{n}", key(label, color), n = rows.len());
            grid(out, &format!("{indent}  "), None, &rows);
            return;
        }
        match v {
            Value::Object(map) if map.is_empty() => {
                let _ = writeln!(out, "{indent}{}: {{}}", key(label, color));
            }
            Value::Object(map) => {
                let _ = writeln!(out, "{indent}{}:", key(label, color));
                map.iter().for_each(|(k, v)| walk(out, depth + 1, k, v, color));
            }
            Value::Array(items) => {
                let _ = writeln!(out, "{indent}{}:", key(label, color));
                if let Some((header, rows)) = as_table(items) {
                    grid(out, &format!("{indent}  "), Some(&header), &rows);
                } else {
                    for (i, item) in items.iter().enumerate() {
                        walk(out, depth + 1, &format!("[{i}]"), item, color);
                    }
                }
            }
            _ => unreachable!("scalars are inline"),
        }
    }
    let mut out = String::new();
    if let Value::Object(map) = value {
        map.iter().for_each(|(k, v)| walk(&mut out, 0, k, v, color));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Envelope {
        let mut env = Envelope::new("eval", json!({"family": "A", "n": 2}));
        env.result = json!({"k": 1, "matrix": {"n": 2, "rows": [[0, 1], [1, "99999999999999999999"]]}});
        env.warnings.push("note, with comma".into());
        env
    }

    #[test]
    fn csv_quotes_fields() {
        let csv = sample().render(Format::Csv, false);
        assert!(csv.starts_with("path,value\nschema_version,1\ncommand,eval\n"));
        assert!(csv.contains("result.matrix.rows.1.1,99999999999999999999\n"));
        assert!(csv.contains("warnings.0,\"note, with comma\"\n"));
        assert!(csv.contains("certificates,[]\n"));
    }

    #[test]
    fn pretty_draws_matrix_grid() {
        let text = sample().render(Format::Pretty, false);
        assert!(text.contains("  matrix: 2x2\n"));
        assert!(text.contains("    0                     1\n"));
        assert!(!text.contains('\x1b'));
        assert!(sample().render(Format::Pretty, true).contains("\x1b[1mcommand\x1b[0m"));
    }

    #[test]
    fn pretty_tables_flat_records() {
        let mut env = Envelope::new("resolve", json!({}));
        env.result = json!({"trace": [{"step": 0, "p": [1, 0]}, {"step": 1, "p": [0, 1]}]});
        let text = env.render(Format::Pretty, false);
        assert!(text.contains("step       p\n"), "{text}");
        assert!(text.contains("   1  [0, 1]\n"), "{text}");
    }

    #[test]
    fn flatten_keeps_empty_containers() {
        let flat = flatten(&json!({"a": [], "b": {}, "c": [null, true]}));
        assert_eq!(
            flat,
            vec![
                ("a".to_string(), "[]".to_string()),
                ("b".into(), "{}".into()),
                ("c.0".into(), "null".into()),
                ("c.1".into(), "true".into()),
            ]
        );
    }
}

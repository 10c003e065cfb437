//! The `{"n": N, "rows": [[...], ...]}` matrix file format.
//!
//! Entries are JSON integers or decimal strings. On output, entries with
//! `|v| <= 2^53 - 1` are written as numbers and everything else as strings,
//! so any JSON reader can load the file without losing precision.

use std::str::FromStr;

use chebdyn_core::IntMatrix;
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Map, Number, Value};
use thiserror::Error;

const MAX_SAFE: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("matrix file must be a JSON object")]
    NotObject,
    #[error("missing field {0:?}")]
    Missing(&'static str),
    #[error("unknown field {0:?}")]
    Unknown(String),
    #[error("field \"n\" must be a positive integer")]
    BadDimension,
    #[error("field \"rows\" must be an array of arrays")]
    BadRows,
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("entry ({row}, {col}) is not an integer: {token}")]
    Entry { row: usize, col: usize, token: String },
}

/// Parses a matrix file from text.
pub fn parse_matrix_file(text: &str) -> Result<IntMatrix, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    matrix_from_value(&value)
}

/// Parses an already decoded JSON value in the matrix file format.
pub fn matrix_from_value(value: &Value) -> Result<IntMatrix, ParseError> {
    let obj = value.as_object().ok_or(ParseError::NotObject)?;
    if let Some(key) = obj.keys().find(|k| *k != "n" && *k != "rows") {
        return Err(ParseError::Unknown(key.clone()));
    }
    let n = obj.get("n").ok_or(ParseError::Missing("n"))?;
    let n = n
        .as_number()
        .and_then(|num| integer_token(&num.to_string()))
        .and_then(|v| usize::try_from(v).ok())
        .filter(|&v| v > 0)
        .ok_or(ParseError::BadDimension)?;
    let rows = obj
        .get("rows")
        .ok_or(ParseError::Missing("rows"))?
        .as_array()
        .ok_or(ParseError::BadRows)?;
    if rows.len() != n {
        return Err(ParseError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut data = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or(ParseError::BadRows)?;
        if row.len() != n {
            return Err(ParseError::RowLength {
                row: i,
                expected: n,
                found: row.len(),
            });
        }
        for (j, entry) in row.iter().enumerate() {
            data.push(parse_entry(entry).ok_or_else(|| ParseError::Entry {
                row: i,
                col: j,
                token: entry.to_string(),
            })?);
        }
    }
    Ok(IntMatrix::from_vec(n, n, data).expect("n x n data"))
}

fn parse_entry(entry: &Value) -> Option<BigInt> {
    match entry {
        Value::Number(num) => integer_token(&num.to_string()),
        Value::String(s) => integer_token(s),
        _ => None,
    }
}

// Plain decimal integers only: no exponent, fraction, '+' or whitespace.
fn integer_token(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// JSON encoding of a single entry.
pub fn entry_value(v: &BigInt) -> Value {
    if v.abs() <= BigInt::from(MAX_SAFE) {
        Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
    } else {
        Value::String(v.to_string())
    }
}

/// The matrix in file format. Non-square input is written with `n` equal to
/// the row count; only square matrices round-trip.
pub fn matrix_to_value(m: &IntMatrix) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), Value::from(m.rows()));
    let rows = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(entry_value).collect()))
        .collect();
    obj.insert("rows".into(), Value::Array(rows));
    Value::Object(obj)
}

pub fn write_matrix_file(m: &IntMatrix) -> String {
    serde_json::to_string(&matrix_to_value(m)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let m = parse_matrix_file(r#"{"n":2,"rows":[[0,"1"],["-12345678901234567890123",3]]}"#).unwrap();
        assert_eq!(m.get(0, 1), &BigInt::from(1));
        assert_eq!(m.get(1, 0).to_string(), "-12345678901234567890123");
    }

    #[test]
    fn rejects_non_integers() {
        for bad in ["1.0", "1e3", "\"1.5\"", "\"+1\"", "\" 1\"", "true", "null", "\"\"", "[1]"] {
            let text = format!(r#"{{"n":1,"rows":[[{bad}]]}}"#);
            assert!(
                matches!(parse_matrix_file(&text), Err(ParseError::Entry { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn rejects_shape_errors() {
        assert_eq!(
            parse_matrix_file(r#"{"n":2,"rows":[[1,0]]}"#),
            Err(ParseError::RowCount { expected: 2, found: 1 })
        );
        assert!(matches!(
            parse_matrix_file(r#"{"n":2,"rows":[[1,0],[0]]}"#),
            Err(ParseError::RowLength { row: 1, .. })
        ));
        assert_eq!(parse_matrix_file(r#"{"n":0,"rows":[]}"#), Err(ParseError::BadDimension));
        assert_eq!(parse_matrix_file(r#"{"rows":[]}"#), Err(ParseError::Missing("n")));
        assert_eq!(
            parse_matrix_file(r#"{"n":1,"rows":[[1]],"x":0}"#),
            Err(ParseError::Unknown("x".into()))
        );
        assert_eq!(parse_matrix_file("[1]"), Err(ParseError::NotObject));
        assert!(matches!(parse_matrix_file("{"), Err(ParseError::Json(_))));
    }

    #[test]
    fn safe_integer_boundary() {
        assert!(entry_value(&BigInt::from(MAX_SAFE)).is_number());
        assert!(entry_value(&BigInt::from(-MAX_SAFE)).is_number());
        assert!(entry_value(&BigInt::from(MAX_SAFE + 1)).is_string());
    }

    #[test]
    fn round_trip() {
        let big = BigInt::from(7).pow(40);
        let m = IntMatrix::from_rows(vec![vec![big.clone(), BigInt::from(-3)], vec![BigInt::from(0), -big]]).unwrap();
        assert_eq!(parse_matrix_file(&write_matrix_file(&m)).unwrap(), m);
    }
}

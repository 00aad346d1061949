//! JSON shapes shared by the CLI and tests. Scalars travel as strings so
//! rationals survive exactly.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn scalars<T: Scalar>(values: &[T]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn parse_scalars<T: Scalar>(value: &Value, len: usize) -> Result<Vec<T>> {
    let items = value.as_array().ok_or_else(|| Error::Parse("expected an array".into()))?;
    if items.len() != len {
        return Err(Error::Parse(format!("expected {len} entries, got {}", items.len())));
    }
    items
        .iter()
        .map(|item| {
            let text = match item {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => return Err(Error::Parse(format!("bad scalar {other}"))),
            };
            text.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad scalar {text:?}")))
        })
        .collect()
}

pub fn field<'a>(value: &'a Value, key: &str) -> Result<&'a Value> {
    value.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

/// `{"rows": n, "cols": m, "data": [[...]]}` from row-major entries.
pub fn matrix<S: ToString>(rows: usize, cols: usize, data: &[S]) -> Value {
    let body: Vec<Value> = data
        .chunks(cols.max(1))
        .take(rows)
        .map(|r| Value::Array(r.iter().map(|v| Value::String(v.to_string())).collect()))
        .collect();
    json!({ "rows": rows, "cols": cols, "data": body })
}

/// Comma separated rows, one line per matrix row.
pub fn csv<S: ToString>(cols: usize, data: &[S]) -> String {
    let mut out = String::new();
    for row in data.chunks(cols.max(1)) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

use crate::Format;
use serde_json::{json, Value};
use sgk_core::{Complex64, Scalar, SparseVector};

/// Values that can appear in command output.
pub trait Cell: Scalar {
    fn json(self) -> Value;

    fn text(self) -> String {
        self.to_text().unwrap_or_default()
    }
}

impl Cell for i64 {
    fn json(self) -> Value {
        Value::from(self)
    }
}

impl Cell for f64 {
    fn json(self) -> Value {
        // Non-finite values have no JSON number; they become null.
        Value::from(self)
    }
}

impl Cell for Complex64 {
    fn json(self) -> Value {
        json!([self.re, self.im])
    }

    fn text(self) -> String {
        format!("{}\t{}", self.re.text(), self.im.text())
    }
}

/// Sparse vector as an object keyed by 0-based index.
pub fn vector_json<T: Cell>(v: &SparseVector<T>) -> Value {
    Value::Object(v.iter().map(|(i, x)| (i.to_string(), x.json())).collect())
}

pub fn vector_rows<T: Cell>(v: &SparseVector<T>) -> Vec<String> {
    v.iter().map(|(i, x)| format!("{i}\t{}", x.text())).collect()
}

/// A command result in both encodings.
pub struct Report {
    pub result: Value,
    pub rows: Vec<String>,
}

impl Report {
    pub fn new(result: Value, rows: Vec<String>) -> Self {
        Report { result, rows }
    }

    pub fn render(&self, command: &str, format: Format, elapsed_ms: f64) -> String {
        match format {
            Format::Json => {
                let doc = json!({ "command": command, "result": self.result, "elapsed_ms": elapsed_ms });
                format!("{doc}\n")
            }
            Format::Tsv => {
                let mut out = self.rows.join("\n");
                if !out.is_empty() {
                    out.push('\n');
                }
                out
            }
        }
    }
}

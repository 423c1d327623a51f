//! Plain-text rendering and JSON helpers shared by the commands.

use std::fmt::Write;

use biderlab_core::rational::{self, Rational};
use biderlab_core::{Biderivation, Matrix};
use serde_json::{json, Value};

pub fn vector_value(v: &[Rational]) -> Value {
    Value::from(v.iter().map(rational::format).collect::<Vec<_>>())
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::from(m.to_rows().iter().map(|r| vector_value(r)).collect::<Vec<_>>())
}

pub fn biderivation_value(b: &Biderivation) -> Value {
    Value::from(b.matrices().iter().map(matrix_value).collect::<Vec<_>>())
}

pub fn matrices_value(ms: &[Matrix]) -> Value {
    Value::from(ms.iter().map(matrix_value).collect::<Vec<_>>())
}

pub fn triple_value((i, j, k): (usize, usize, usize)) -> Value {
    json!([i, j, k])
}

/// Accumulates the text report.
#[derive(Default)]
pub struct Text(String);

impl Text {
    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        self.0.push_str(s.as_ref());
        self.0.push('\n');
        self
    }

    pub fn field(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        let _ = writeln!(self.0, "{key}: {value}");
        self
    }

    /// Columns right-aligned to their widest entry.
    pub fn matrix(&mut self, label: &str, m: &Matrix) -> &mut Self {
        self.line(format!("{label} ="));
        let cells: Vec<Vec<String>> = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(rational::format).collect())
            .collect();
        let widths: Vec<usize> = (0..m.cols())
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        for row in &cells {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            self.line(format!("  [ {} ]", padded.join("  ")));
        }
        self
    }

    pub fn biderivation(&mut self, label: &str, b: &Biderivation) -> &mut Self {
        for (k, m) in b.matrices().iter().enumerate() {
            self.matrix(&format!("{label}.B{}", k + 1), m);
        }
        self
    }

    pub fn finish(self) -> String {
        self.0
    }
}

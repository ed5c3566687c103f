//! Decomposition matrices as JSON, CSV and an aligned text table.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, StrictPartition};
use crate::decomp::DecompositionMatrix;
use crate::error::{Error, Result};

/// `{n, rows: ["4","31"], cols: ["4","31","22"], entries: [[…]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<u64>>,
}

impl From<&DecompositionMatrix> for MatrixJson {
    fn from(m: &DecompositionMatrix) -> Self {
        MatrixJson { n: m.n, rows: m.row_labels(), cols: m.col_labels(), entries: m.entries.clone() }
    }
}

/// Parts of a concatenated label; every part of a size `≤ 9` object is a
/// single digit.
fn label_parts(label: &str) -> Result<Vec<usize>> {
    label
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::invalid(format!("bad label {label:?}"))))
        .collect()
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<DecompositionMatrix> {
        if self.n > 9 {
            return Err(Error::invalid("concatenated labels are ambiguous above n = 9"));
        }
        let rows = self.rows.iter().map(|r| StrictPartition::new(label_parts(r)?)).collect::<Result<Vec<_>>>()?;
        let cols = self.cols.iter().map(|c| Composition::new(label_parts(c)?)).collect::<Result<Vec<_>>>()?;
        if self.entries.len() != rows.len() || self.entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::invalid("entry table does not match the labels"));
        }
        Ok(DecompositionMatrix { n: self.n, rows, cols, entries: self.entries.clone() })
    }
}

pub fn matrix_to_json(m: &DecompositionMatrix) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("matrix JSON is always serializable")
}

pub fn matrix_from_json(s: &str) -> Result<DecompositionMatrix> {
    let json: MatrixJson = serde_json::from_str(s).map_err(|e| Error::invalid(format!("malformed matrix JSON: {e}")))?;
    json.to_matrix()
}

/// Header `,4,31,22`, then one labelled line per row.
pub fn matrix_to_csv(m: &DecompositionMatrix) -> String {
    let mut out = format!(",{}\n", m.col_labels().join(","));
    for (label, row) in m.row_labels().iter().zip(&m.entries) {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&format!("{label},{}\n", cells.join(",")));
    }
    out
}

/// Rows labelled on the left, column labels written vertically on top.
pub fn matrix_to_pretty(m: &DecompositionMatrix) -> String {
    let rows = m.row_labels();
    let cols = m.col_labels();
    let left = rows.iter().map(String::len).max().unwrap_or(0);
    let width = m.entries.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let height = cols.iter().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for line in 0..height {
        out.push_str(&" ".repeat(left + 2));
        let cells: Vec<String> = cols
            .iter()
            .map(|c| {
                let ch = c.chars().nth(line).map_or(' ', |x| x);
                format!("{ch:>width$}")
            })
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    for (label, row) in rows.iter().zip(&m.entries) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        out.push_str(&format!("{label:>left$} [{}]\n", cells.join(" ")));
    }
    out
}

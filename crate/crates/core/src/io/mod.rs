//! Text, JSON and CSV formats.

pub mod expr;
pub mod json;
pub mod matrix;

pub use expr::{parse_nsf, parse_qsym, parse_terms, ParsedTerm};
pub use json::{ElementJson, TermJson};
pub use matrix::{matrix_from_json, matrix_to_csv, matrix_to_json, matrix_to_pretty, MatrixJson};

//! Schur `Q`-functions, shifted tableaux and the decomposition matrices of
//! `HCl_n(0)`.

pub mod matrix;
pub mod polynomial;
pub mod reference;
pub mod tableaux;

pub use matrix::{carter_matrix, decomposition_matrix, peak_histogram, theta_expand, DecompositionMatrix};
pub use polynomial::{poly_to_fundamental, poly_to_monomial, q_series, qsym_to_poly, schur_q, MultivariatePolynomial};
pub use reference::{reference_table, ReferenceTable};
pub use tableaux::{shifted_tableaux, tableau_peaks, ShiftedTableau};

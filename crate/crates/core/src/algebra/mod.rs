//! Exact coefficient arithmetic and sparse linear algebra shared by the
//! algebraic modules.

pub mod element;
pub mod operator;
pub mod polynomial;
pub mod radical;
pub mod scalar;
pub mod sparse;

pub use element::AlgebraElement;
pub use operator::{commutant, minimal_polynomial, Commutant, SparseOperator};
pub use polynomial::Polynomial;
pub use radical::{trace_form_radical, StructureConstants};
pub use scalar::{parse_rational, rat, ratio, Field, GaussianRational, Rational};
pub use sparse::{nullspace, rank, row_reduce, solve_combination, Echelon, SparseVec};

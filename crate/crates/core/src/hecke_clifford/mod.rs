//! The 0-Hecke-Clifford algebra `HCl_n(0)`, its induced modules `M_I`, the
//! order `≤_I` behind their composition series, and the simple modules.

pub mod clifford;
pub mod engine;
pub mod iso;
pub mod module;
pub mod order;
pub mod simple;

pub use engine::{radical_dimension_report, radical_formula, HclAlgebra, RadicalReport};
pub use clifford::{clifford_multiply, clifford_product, clifford_sign, clifford_word, CliffordElement};
pub use iso::{build_iso, map_from_image};
pub use module::{
    alpha, build_module, endomorphism_dim, frobenius_res, frobenius_res_from_series, intertwines,
    verify_relations, HclModule, ModuleBasisVector, Operator,
};
pub use order::{check_triangularity, cover_relations, leq_order, LeqOrder};
pub use simple::{ch_simple, generated_dimension, minimal_idempotent, simple_dimension, simple_module, SubModule};

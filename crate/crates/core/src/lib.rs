pub mod algebra;
pub mod combinatorics;
pub mod config;
pub mod decomp;
pub mod error;
pub mod hecke_clifford;
pub mod io;
pub mod peak;
pub mod sym;

pub use error::{Error, Result};

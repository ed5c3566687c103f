//! Noncommutative symmetric functions and their quasi-symmetric dual.

pub mod ncsf;
pub mod qsym;

use std::fmt;

use crate::algebra::{AlgebraElement, Rational};
use crate::combinatorics::Composition;

pub use ncsf::{
    coproduct, from_descent_algebra, group_algebra_product, internal_product, r_to_s, s_to_r, to_descent_algebra,
    NsfBasis, NsfElement, NsfTensor,
};
pub use qsym::{f_to_m, m_to_f, pairing, quasi_shuffle, QsymBasis, QsymElement};

pub(crate) fn homogeneous_degree(terms: &AlgebraElement<Composition>) -> Option<usize> {
    let mut sizes = terms.support().map(|i| i.size());
    let first = sizes.next()?;
    sizes.all(|s| s == first).then_some(first)
}

/// Writes `2R_[2] + 2R_[1,1]`: terms in decreasing composition order,
/// unit coefficients omitted, fractions parenthesized.
pub(crate) fn fmt_terms(f: &mut fmt::Formatter<'_>, symbol: &str, terms: &AlgebraElement<Composition>) -> fmt::Result {
    if terms.is_zero() {
        return write!(f, "0");
    }
    for (idx, (key, coeff)) in terms.iter().rev().enumerate() {
        let negative = coeff < &Rational::from_integer(0.into());
        let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
        match (idx, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if !magnitude.is_integer() {
            write!(f, "({magnitude})")?;
        } else if magnitude != Rational::from_integer(1.into()) {
            write!(f, "{magnitude}")?;
        }
        let parts: Vec<String> = key.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "{symbol}_[{}]", parts.join(","))?;
    }
    Ok(())
}

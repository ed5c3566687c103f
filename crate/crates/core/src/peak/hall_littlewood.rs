use super::{peak_classes, peak_coordinates, pi_class};
use crate::algebra::{rat, Rational, SparseOperator, SparseVec};
use crate::combinatorics::{peak_compositions, Composition, IndexSet};
use crate::error::{Error, Result};
use crate::sym::{NsfBasis, NsfElement};

/// The two-row values `Q_{(a)}`, `Q_{(a,1)}` and `Q_{(a,b)}` (`a, b ≥ 2`)
/// in terms of peak classes; `b = 0` stands for the one-row case.
pub fn hl_q_two_row(a: usize, b: usize) -> Result<NsfElement> {
    let n = a + b;
    let pi = |elems: &[usize]| pi_class(&IndexSet::new(n, elems.iter().copied())?, n);
    match b {
        0 if a >= 1 => Ok(pi(&[])?.scale(&rat(2))),
        1 if a >= 2 => Ok(pi(&[a])?.add(&pi(&[])?).scale(&rat(2))),
        _ if a >= 2 && b >= 2 => Ok(pi(&[a])?.add(&pi(&[a + 1])?).add(&pi(&[])?).scale(&rat(4))),
        _ => Err(Error::invalid(format!("({a},{b}) is not a peak composition"))),
    }
}

/// `Q_I = Q_{i₁i₂} Q_{i₃i₄} ⋯` for a peak composition `I`, with a trailing
/// one-row factor when `ℓ(I)` is odd.
pub fn hl_q(i: &Composition) -> Result<NsfElement> {
    if i.is_empty() || !i.is_peak_composition() {
        return Err(Error::invalid(format!("{i} is not a peak composition")));
    }
    i.parts().chunks(2).try_fold(NsfElement::one(NsfBasis::R), |acc, pair| {
        let factor = hl_q_two_row(pair[0], pair.get(1).copied().unwrap_or(0))?;
        Ok(acc.product(&factor))
    })
}

/// Coordinates of `{Q_I}` against `{Π_P}` in degree `n`.
///
/// Returns the peak compositions in decreasing lexicographic order and the
/// matrix whose column `k` holds the `Π`-coordinates of `Q_{I_k}`, rows
/// indexed by the peak sets `HP(I_k)` in the same order. In this order the
/// matrix is upper triangular with nonzero diagonal.
pub fn hl_q_matrix(n: usize) -> Result<(Vec<Composition>, SparseOperator<Rational>)> {
    let cols = peak_compositions(n);
    let position = |p: &IndexSet| cols.iter().position(|i| i.peak_set() == *p).expect("every peak set has a column");
    debug_assert_eq!(cols.len(), peak_classes(n).len());
    let vectors = cols
        .iter()
        .map(|i| {
            let coords = peak_coordinates(&hl_q(i)?, n)?;
            Ok(SparseVec::from_pairs(coords.iter().map(|(p, c)| (position(p), c.clone()))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((cols, SparseOperator::from_columns(vectors)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn pi(n: usize, e: &[usize]) -> NsfElement {
        pi_class(&IndexSet::new(n, e.iter().copied()).unwrap(), n).unwrap()
    }

    #[test]
    fn two_row_examples() {
        assert_eq!(hl_q(&c("2")).unwrap(), pi(2, &[]).scale(&rat(2)));
        assert_eq!(hl_q(&c("3,1")).unwrap(), pi(4, &[3]).add(&pi(4, &[])).scale(&rat(2)));
        assert_eq!(hl_q(&c("2,2")).unwrap(), pi(4, &[2]).add(&pi(4, &[3])).add(&pi(4, &[])).scale(&rat(4)));
        assert!(hl_q(&c("1,2")).is_err());
    }

    #[test]
    fn matrix_is_invertible() {
        for n in 1..7 {
            let (_, m) = hl_q_matrix(n).unwrap();
            assert!(m.is_invertible(), "n = {n}");
        }
    }
}

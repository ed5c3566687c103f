//! Decomposition matrices of `HCl_n(0)`: the multiplicities `d_{λI}` of
//! the simple modules `HClS_I` in the restriction of `U_λ`.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};

use super::polynomial::{poly_to_fundamental, schur_q};
use super::tableaux::{shifted_tableaux, tableau_peaks};
use crate::algebra::{rat, ratio, solve_combination, Rational};
use crate::combinatorics::{peak_compositions, peak_sets, strict_partitions, Composition, IndexSet, StrictPartition};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::peak::{composition_index, theta_fun, to_vector};
use crate::sym::QsymElement;

/// Rows are the strict partitions of `n`, columns the peak compositions,
/// both in decreasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub n: usize,
    pub rows: Vec<StrictPartition>,
    pub cols: Vec<Composition>,
    pub entries: Vec<Vec<u64>>,
}

impl DecompositionMatrix {
    pub fn row_labels(&self) -> Vec<String> {
        self.rows.iter().map(StrictPartition::label).collect()
    }

    pub fn col_labels(&self) -> Vec<String> {
        self.cols.iter().map(Composition::label).collect()
    }

    /// Entry addressed by concatenated-part labels such as `"431"`.
    pub fn entry_by_label(&self, row: &str, col: &str) -> Option<u64> {
        let r = self.rows.iter().position(|x| x.label() == row)?;
        let c = self.cols.iter().position(|x| x.label() == col)?;
        Some(self.entries[r][c])
    }
}

/// Coefficients `c_P` with `g = Σ c_P Θ_P`; zero coefficients are omitted.
pub fn theta_expand(g: &QsymElement) -> Result<BTreeMap<IndexSet, Rational>> {
    let Some(n) = g.degree() else {
        return Ok(BTreeMap::new());
    };
    if g.terms().support().any(|i| i.size() != n) {
        return Err(Error::invalid("theta_expand needs a homogeneous element"));
    }
    let index = composition_index(n);
    let sets = peak_sets(n);
    let vectors = sets
        .iter()
        .map(|p| Ok(to_vector(theta_fun(p, n)?.to_f().terms(), &index)))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = solve_combination(&vectors, &to_vector(g.to_f().terms(), &index))
        .map_err(|residual| Error::NotInSpan { residual: format!("{residual:?}") })?;
    Ok(sets.into_iter().zip(coeffs).filter(|(_, c)| *c != rat(0)).collect())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("decomposition matrices need n >= 1"));
    }
    Error::check_bound("decomposition matrix n", n, Bounds::global().decomp_n)
}

/// `2^e` as a rational, `e` possibly negative.
fn power_of_two(e: i64) -> Rational {
    if e >= 0 {
        rat(1i64 << e)
    } else {
        ratio(1, 1i64 << -e)
    }
}

fn to_entry(x: &Rational, lambda: &StrictPartition, i: &Composition) -> Result<u64> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::internal(format!("d[{lambda}, {i}] = {x} is not a non-negative integer")));
    }
    x.to_integer()
        .to_u64()
        .ok_or_else(|| Error::internal(format!("d[{lambda}, {i}] = {x} overflows")))
}

/// `2^{⌊(|P|+1)/2⌋ - ⌊ℓ(λ)/2⌋}`, the normalization between `Θ_P`
/// coefficients and multiplicities.
fn normalization(p_len: usize, lambda: &StrictPartition) -> Rational {
    power_of_two(((p_len + 1) / 2) as i64 - (lambda.len() / 2) as i64)
}

/// The Pfaffian route: expand `Q_λ` in the `Θ_P` and renormalize.
pub fn decomposition_matrix(n: usize) -> Result<DecompositionMatrix> {
    check_n(n)?;
    let rows = strict_partitions(n);
    let cols = peak_compositions(n);
    let entries = rows
        .iter()
        .map(|lambda| {
            let q = schur_q(lambda, n)?;
            let coeffs = theta_expand(&poly_to_fundamental(&q, n)?)?;
            cols.iter()
                .map(|i| {
                    let p = i.peak_set();
                    let c = coeffs.get(&p).cloned().unwrap_or_else(|| rat(0));
                    to_entry(&(c * normalization(p.len(), lambda)), lambda, i)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionMatrix { n, rows, cols, entries })
}

/// Histogram of `Λ(T)` over the standard shifted tableaux of shape `λ`.
pub fn peak_histogram(lambda: &StrictPartition) -> BTreeMap<IndexSet, u64> {
    let mut out = BTreeMap::new();
    for t in shifted_tableaux(lambda) {
        *out.entry(tableau_peaks(&t)).or_insert(0) += 1;
    }
    out
}

/// The tableau route: `d_{λI} = 2^{⌊ℓ(I)/2⌋ - ⌊ℓ(λ)/2⌋} |{T : Λ(T) = HP(I)}|`.
pub fn carter_matrix(n: usize) -> Result<DecompositionMatrix> {
    check_n(n)?;
    let rows = strict_partitions(n);
    let cols = peak_compositions(n);
    let entries = rows
        .iter()
        .map(|lambda| {
            let hist = peak_histogram(lambda);
            cols.iter()
                .map(|i| {
                    let count = hist.get(&i.peak_set()).copied().unwrap_or(0);
                    let e = (i.len() / 2) as i64 - (lambda.len() / 2) as i64;
                    to_entry(&(rat(count as i64) * power_of_two(e)), lambda, i)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionMatrix { n, rows, cols, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn theta_expand_examples() {
        let t2 = theta_fun(&set(3, &[2]), 3).unwrap();
        assert_eq!(theta_expand(&t2).unwrap(), BTreeMap::from([(set(3, &[2]), rat(1))]));
        let f2 = QsymElement::fundamental("2".parse().unwrap());
        assert!(matches!(theta_expand(&f2), Err(Error::NotInSpan { .. })));
    }

    #[test]
    fn small_matrices() {
        let m3 = decomposition_matrix(3).unwrap();
        assert_eq!(m3.entries, vec![vec![1, 0], vec![0, 1]]);
        let m4 = decomposition_matrix(4).unwrap();
        assert_eq!(m4.row_labels(), ["4", "31"]);
        assert_eq!(m4.col_labels(), ["4", "31", "22"]);
        assert_eq!(m4.entries, vec![vec![1, 0, 0], vec![0, 1, 1]]);
        assert_eq!(carter_matrix(4).unwrap(), m4);
    }
}

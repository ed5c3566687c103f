//! Jacobson radical of a finite-dimensional algebra in characteristic zero.

use super::scalar::Field;
use super::sparse::{rank, SparseVec};
use crate::error::{Error, Result};

/// Multiplication table of an algebra with basis `b_0 … b_{dim-1}`:
/// `product(i, j)` is the coordinate vector of `b_i b_j`.
#[derive(Clone, Debug)]
pub struct StructureConstants<F> {
    dim: usize,
    table: Vec<SparseVec<F>>,
}

impl<F: Field> StructureConstants<F> {
    /// `product(i, j)` is called once per ordered pair.
    pub fn build(dim: usize, mut product: impl FnMut(usize, usize) -> SparseVec<F>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert!(v.max_index().map_or(true, |m| m < dim), "product outside the basis");
                table.push(v);
            }
        }
        StructureConstants { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim + j]
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out = out.axpy(&a.mul_ref(b), self.product(i, j));
            }
        }
        out
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        Self::build(d1 + d2, |i, j| match (i < d1, j < d1) {
            (true, true) => self.product(i, j).clone(),
            (false, false) => other.product(i - d1, j - d1).shifted(d1),
            _ => SparseVec::zero(),
        })
    }

    /// `Tr(L_{b_k})` for every basis element, where `L_x` is left
    /// multiplication by `x`.
    pub fn left_traces(&self) -> Vec<F> {
        (0..self.dim)
            .map(|k| {
                (0..self.dim).fold(F::zero(), |acc, m| acc.add_ref(&self.product(k, m).get(m)))
            })
            .collect()
    }
}

/// Dimension of the Jacobson radical, computed as the radical of the trace
/// form `(x, y) ↦ Tr(L_{xy})`. Over a field of characteristic zero the two
/// coincide (Dickson's criterion).
pub fn trace_form_radical<F: Field>(algebra: &StructureConstants<F>, max_dim: usize) -> Result<usize> {
    let dim = algebra.dim();
    Error::check_bound("algebra dimension", dim, max_dim)?;
    let traces = algebra.left_traces();
    let form_rows: Vec<SparseVec<F>> = (0..dim)
        .map(|i| {
            SparseVec::from_pairs((0..dim).map(|j| {
                let v = algebra
                    .product(i, j)
                    .iter()
                    .fold(F::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&traces[k])));
                (j, v)
            }))
        })
        .collect();
    Ok(dim - rank(&form_rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};

    /// Matrix units e_{rc} of the n×n matrix algebra, indexed r·n + c.
    fn matrix_algebra(n: usize) -> StructureConstants<Rational> {
        StructureConstants::build(n * n, |i, j| {
            let (r1, c1) = (i / n, i % n);
            let (r2, c2) = (j / n, j % n);
            if c1 == r2 {
                SparseVec::unit(r1 * n + c2)
            } else {
                SparseVec::zero()
            }
        })
    }

    /// Upper-triangular 2×2 matrices with basis e11, e12, e22.
    fn upper_triangular() -> StructureConstants<Rational> {
        let units = [(0, 0), (0, 1), (1, 1)];
        StructureConstants::build(3, |i, j| {
            let (r1, c1) = units[i];
            let (r2, c2) = units[j];
            if c1 == r2 {
                let k = units.iter().position(|&u| u == (r1, c2)).unwrap();
                SparseVec::unit(k)
            } else {
                SparseVec::zero()
            }
        })
    }

    #[test]
    fn matrix_algebra_is_semisimple() {
        assert_eq!(trace_form_radical(&matrix_algebra(2), 400).unwrap(), 0);
    }

    #[test]
    fn upper_triangular_has_one_dimensional_radical() {
        assert_eq!(trace_form_radical(&upper_triangular(), 400).unwrap(), 1);
    }

    #[test]
    fn radical_is_additive_over_direct_sums() {
        let sum = upper_triangular().direct_sum(&matrix_algebra(2)).direct_sum(&upper_triangular());
        assert_eq!(trace_form_radical(&sum, 400).unwrap(), 2);
    }

    #[test]
    fn dual_numbers() {
        // k[e]/(e^2): basis 1, e
        let alg = StructureConstants::build(2, |i, j| match (i, j) {
            (0, k) | (k, 0) => SparseVec::unit(k),
            _ => SparseVec::zero(),
        });
        assert_eq!(trace_form_radical(&alg, 400).unwrap(), 1);
        let one = SparseVec::unit(0);
        let e: SparseVec<Rational> = SparseVec::unit(1);
        assert_eq!(alg.multiply(&one.add(&e), &one.sub(&e)), SparseVec::unit(0).scale(&rat(1)));
    }
}

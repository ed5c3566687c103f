//! Square sparse matrices acting on column vectors, plus the commutant and
//! minimal-polynomial solvers built on exact elimination.

use std::fmt;

use super::polynomial::Polynomial;
use super::scalar::{Field, GaussianRational};
use super::sparse::{nullspace, Echelon, SparseVec};
use crate::error::{Error, Result};

/// A `dim × dim` matrix stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseOperator<F = GaussianRational> {
    dim: usize,
    cols: Vec<SparseVec<F>>,
}

impl<F: Field> SparseOperator<F> {
    pub fn zero(dim: usize) -> Self {
        SparseOperator { dim, cols: vec![SparseVec::zero(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOperator { dim, cols: (0..dim).map(SparseVec::unit).collect() }
    }

    /// Panics if a column has an entry outside `0..dim`.
    pub fn from_columns(cols: Vec<SparseVec<F>>) -> Self {
        let dim = cols.len();
        for c in &cols {
            assert!(c.max_index().map_or(true, |m| m < dim), "operator entry out of range");
        }
        SparseOperator { dim, cols }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut per_col: Vec<Vec<(usize, F)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "operator entry out of range");
            per_col[c].push((r, v));
        }
        SparseOperator { dim, cols: per_col.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &SparseVec<F> {
        &self.cols[c]
    }

    pub fn get(&self, row: usize, col: usize) -> F {
        self.cols[col].get(row)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (k, a) in v.iter() {
            out = out.axpy(a, &self.cols[k]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SparseOperator { dim: self.dim, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SparseOperator {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        SparseOperator {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        SparseOperator { dim: self.dim, cols: self.cols.iter().map(|col| col.scale(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let triplets = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (c, r, v.clone())));
        Self::from_triplets(self.dim, triplets)
    }

    /// Row-major flattening `(r, c) ↦ r·dim + c`.
    pub fn flatten(&self) -> SparseVec<F> {
        let dim = self.dim;
        SparseVec::from_pairs(
            self.cols
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r * dim + c, v.clone()))),
        )
    }

    pub fn unflatten(dim: usize, flat: &SparseVec<F>) -> Self {
        Self::from_triplets(dim, flat.iter().map(|(idx, v)| (idx / dim, idx % dim, v.clone())))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Linear independence of the columns.
    pub fn is_invertible(&self) -> bool {
        let mut ech = Echelon::new();
        self.cols.iter().all(|c| ech.insert(c))
    }

    /// The inverse, or `None` when the columns are dependent.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let mut ech = Echelon::new();
        for (k, c) in self.cols.iter().enumerate() {
            // a pivot among the tags means the real parts were dependent
            let residual = ech.reduce(&c.add(&SparseVec::unit(d + k)));
            if residual.leading().map_or(true, |(p, _)| p >= d) {
                return None;
            }
            ech.insert(&residual);
        }
        let cols = (0..d)
            .map(|j| {
                let (real, tags) = ech.reduce(&SparseVec::unit(j)).split_at(d);
                debug_assert!(real.is_zero());
                tags.scale(&F::one().neg_ref())
            })
            .collect();
        Some(SparseOperator { dim: d, cols })
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_polynomial(&self, p: &Polynomial<F>) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(self.dim), |acc, c| {
            acc.compose(self).add(&Self::identity(self.dim).scale(c))
        })
    }

    /// Converts entries into another field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseOperator<G> {
        SparseOperator {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|c| SparseVec::from_pairs(c.iter().map(|(i, v)| (i, f(v)))))
                .collect(),
        }
    }
}

impl<F: Field> fmt::Debug for SparseOperator<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseOperator({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`commutant`].
#[derive(Clone, Debug)]
pub struct Commutant<F: Field> {
    pub dimension: usize,
    pub basis: Vec<SparseOperator<F>>,
}

/// The algebra `{X : XG = GX for all generators G}`.
///
/// Solved as a homogeneous system in the `d²` entries of `X`. Equations from
/// earlier generators are inserted first, so listing signed permutation
/// matrices (such as Clifford generators) before the others keeps the
/// elimination sparse.
pub fn commutant<F: Field>(generators: &[SparseOperator<F>], max_dim: usize) -> Result<Commutant<F>> {
    let Some(first) = generators.first() else {
        return Err(Error::invalid("commutant needs at least one generator"));
    };
    let d = first.dim();
    Error::check_bound("commutant operator dimension", d, max_dim)?;
    if generators.iter().any(|g| g.dim() != d) {
        return Err(Error::invalid("commutant generators must share one dimension"));
    }
    let unknown = |r: usize, c: usize| r * d + c;
    let mut equations: Vec<SparseVec<F>> = Vec::new();
    for g in generators {
        let gt = g.transpose();
        // (XG - GX)[r][c] = Σ_k X[r][k] G[k][c] - Σ_k G[r][k] X[k][c]
        for r in 0..d {
            for c in 0..d {
                let mut pairs: Vec<(usize, F)> = Vec::new();
                for (k, v) in g.column(c).iter() {
                    pairs.push((unknown(r, k), v.clone()));
                }
                for (k, v) in gt.column(r).iter() {
                    pairs.push((unknown(k, c), v.neg_ref()));
                }
                let eq = SparseVec::from_pairs(pairs);
                if !eq.is_zero() {
                    equations.push(eq);
                }
            }
        }
    }
    let mut ech = Echelon::new();
    for eq in &equations {
        ech.insert(eq);
    }
    let kernel = nullspace(&ech.to_rref(), d * d);
    Ok(Commutant {
        dimension: kernel.len(),
        basis: kernel.iter().map(|v| SparseOperator::unflatten(d, v)).collect(),
    })
}

/// Monic polynomial of least degree annihilating `op`, found as the first
/// linear dependency among `I, op, op², …`.
pub fn minimal_polynomial<F: Field>(op: &SparseOperator<F>, max_dim: usize) -> Result<Polynomial<F>> {
    let d = op.dim();
    Error::check_bound("minimal polynomial operator dimension", d, max_dim)?;
    let width = d * d;
    let mut ech = Echelon::new();
    let mut power = SparseOperator::identity(d);
    for k in 0..=d {
        let tagged = power.flatten().add(&SparseVec::unit(width + k));
        let residual = ech.reduce(&tagged);
        let (real, tags) = residual.split_at(width);
        if real.is_zero() {
            let coeffs = tags.to_dense(k + 1);
            return Ok(Polynomial::new(coeffs).monic());
        }
        ech.insert(&tagged);
        power = power.compose(op);
    }
    Err(Error::internal("no annihilating polynomial of degree <= dim found"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, Rational};

    fn op(rows: &[&[i64]]) -> SparseOperator<Rational> {
        let dim = rows.len();
        SparseOperator::from_triplets(
            dim,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, rat(v)))),
        )
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let c = commutant(&[SparseOperator::<Rational>::identity(3)], 64).unwrap();
        assert_eq!(c.dimension, 9);
    }

    #[test]
    fn commutant_of_matrix_units_is_scalars() {
        let units: Vec<_> = (0..2)
            .flat_map(|r| (0..2).map(move |c| SparseOperator::from_triplets(2, [(r, c, rat(1))])))
            .collect();
        let c = commutant(&units, 64).unwrap();
        assert_eq!(c.dimension, 1);
        assert!(c.basis[0].compose(&units[1]) == units[1].compose(&c.basis[0]));
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = op(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).is_identity());
        assert!(inv.compose(&a).is_identity());
        assert!(op(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn commutant_bound_is_enforced() {
        let err = commutant(&[SparseOperator::<Rational>::identity(5)], 4).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { .. }));
    }

    #[test]
    fn minimal_polynomials_of_small_operators() {
        let id = SparseOperator::<Rational>::identity(3);
        assert_eq!(minimal_polynomial(&id, 16).unwrap(), Polynomial::new(vec![rat(-1), rat(1)]));
        let jordan = op(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&jordan, 16).unwrap(), Polynomial::new(vec![rat(0), rat(0), rat(1)]));
        let m = op(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let p = minimal_polynomial(&m, 16).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert!(m.eval_polynomial(&p).is_zero());
    }
}

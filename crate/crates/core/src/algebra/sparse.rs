//! Exact sparse vectors and incremental Gaussian elimination.

use std::collections::HashMap;

use super::scalar::Field;

/// A sparse vector stored as `(index, value)` pairs with strictly increasing
/// indices and no zero values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(idx: usize) -> Self {
        SparseVec { entries: vec![(idx, F::one())] }
    }

    /// Builds from arbitrary pairs: sorts, sums duplicates, drops zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut raw: Vec<(usize, F)> = pairs.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.add_ref(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: usize) -> F {
        match self.entries.binary_search_by_key(&idx, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, factor: &F) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.mul_ref(factor))).collect(),
        }
    }

    /// `self + alpha · other`, by a sorted merge.
    pub fn axpy(&self, alpha: &F, other: &Self) -> Self {
        if alpha.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, vb.mul_ref(alpha)));
                        b.next();
                    } else {
                        let v = va.add_ref(&vb.mul_ref(alpha));
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    out.push((*ib, vb.mul_ref(alpha)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&F::one().neg_ref(), other)
    }

    pub fn dot(&self, other: &Self) -> F {
        let mut acc = F::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a < b {
                i += 1;
            } else if b < a {
                j += 1;
            } else {
                acc = acc.add_ref(&self.entries[i].1.mul_ref(&other.entries[j].1));
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Splits into the part with indices `< at` and the part `>= at`
    /// (the latter re-based to start from zero).
    pub fn split_at(&self, at: usize) -> (Self, Self) {
        let pos = self.entries.partition_point(|(i, _)| *i < at);
        (
            SparseVec { entries: self.entries[..pos].to_vec() },
            SparseVec { entries: self.entries[pos..].iter().map(|(i, v)| (i - at, v.clone())).collect() },
        )
    }
}

/// A row-echelon basis built one vector at a time.
///
/// Every stored row is normalised so that its leading entry is `1`; the
/// leading index is the row's pivot and no two rows share a pivot. Elimination
/// is deterministic: identical insertion sequences give identical rows.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    pivot_row: HashMap<usize, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivot_row: HashMap::new() }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("stored rows are nonzero").0)
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut work = v.clone();
        let mut pos = 0;
        while pos < work.entries.len() {
            let (col, coeff) = &work.entries[pos];
            match self.pivot_row.get(col) {
                Some(&r) => {
                    let alpha = coeff.neg_ref();
                    work = work.axpy(&alpha, &self.rows[r]);
                    // entries before `pos` are untouched since the row starts at `col`
                }
                None => pos += 1,
            }
        }
        work
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let residual = self.reduce(v);
        match residual.leading() {
            None => false,
            Some((pivot, lead)) => {
                let inv = F::one().div_ref(lead);
                self.pivot_row.insert(pivot, self.rows.len());
                self.rows.push(residual.scale(&inv));
                true
            }
        }
    }

    /// Fully reduced rows sorted by pivot: each pivot column is zero in every
    /// other row.
    pub fn to_rref(&self) -> Vec<SparseVec<F>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].leading().unwrap().0));
        let mut done: HashMap<usize, SparseVec<F>> = HashMap::new();
        for r in order {
            let row = &self.rows[r];
            let pivot = row.leading().unwrap().0;
            let mut work = row.clone();
            let mut pos = 1;
            while pos < work.entries.len() {
                let (col, coeff) = &work.entries[pos];
                match done.get(col) {
                    Some(other) => work = work.axpy(&coeff.neg_ref(), other),
                    None => pos += 1,
                }
            }
            done.insert(pivot, work);
        }
        let mut out: Vec<(usize, SparseVec<F>)> = done.into_iter().collect();
        out.sort_by_key(|(p, _)| *p);
        out.into_iter().map(|(_, v)| v).collect()
    }
}

/// Rank over the field. Vectors are inserted sparsest first, which keeps
/// fill-in low without changing the result.
pub fn rank<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut order: Vec<&SparseVec<F>> = vectors.iter().collect();
    order.sort_by_key(|v| v.nnz());
    let mut ech = Echelon::new();
    for v in order {
        ech.insert(v);
    }
    ech.rank()
}

/// Reduced row-echelon basis of the span.
pub fn row_reduce<F: Field>(vectors: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    let mut order: Vec<&SparseVec<F>> = vectors.iter().collect();
    order.sort_by_key(|v| v.nnz());
    let mut ech = Echelon::new();
    for v in order {
        ech.insert(v);
    }
    ech.to_rref()
}

/// Basis of `{x : row · x = 0 for every row}` for `x` of length `ncols`.
pub fn nullspace<F: Field>(rows: &[SparseVec<F>], ncols: usize) -> Vec<SparseVec<F>> {
    let rref = row_reduce(rows);
    let mut pivot_rows: Vec<(usize, &SparseVec<F>)> = Vec::with_capacity(rref.len());
    let mut is_pivot = vec![false; ncols];
    for row in &rref {
        let p = row.leading().unwrap().0;
        assert!(p < ncols, "row entry outside the declared width");
        is_pivot[p] = true;
        pivot_rows.push((p, row));
    }
    // column -> list of (pivot, coefficient) among pivot rows
    let mut by_col: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
    for (p, row) in &pivot_rows {
        for (c, v) in row.iter().skip(1) {
            by_col.entry(c).or_default().push((*p, v.clone()));
        }
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut pairs = vec![(free, F::one())];
            if let Some(list) = by_col.get(&free) {
                pairs.extend(list.iter().map(|(p, v)| (*p, v.neg_ref())));
            }
            SparseVec::from_pairs(pairs)
        })
        .collect()
}

/// Finds coefficients `c` with `Σ c_k vectors[k] = target`, or `None` when
/// `target` is outside the span. When the vectors are dependent any one
/// solution is returned. `Err` carries the nonzero residual.
pub fn solve_combination<F: Field>(
    vectors: &[SparseVec<F>],
    target: &SparseVec<F>,
) -> Result<Vec<F>, SparseVec<F>> {
    let width = vectors
        .iter()
        .chain(std::iter::once(target))
        .filter_map(|v| v.max_index())
        .max()
        .map_or(0, |m| m + 1);
    let mut ech = Echelon::new();
    for (k, v) in vectors.iter().enumerate() {
        let tagged = v.add(&SparseVec::unit(width + k));
        ech.insert(&tagged);
    }
    let residual = ech.reduce(target);
    let (real, tags) = residual.split_at(width);
    if !real.is_zero() {
        return Err(real);
    }
    let mut out = vec![F::zero(); vectors.len()];
    for (k, v) in tags.iter() {
        out[k] = v.neg_ref();
    }
    Ok(out)
}

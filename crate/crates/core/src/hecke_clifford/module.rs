//! The induced modules `M_I = HCl_n(0) ⊗_{H_n(0)} S_I` with basis
//! `c_D ε_I`, `D ⊆ [1, n]`. The basis vector `c_D ε_I` has index
//! `D.bits()`.

use super::clifford::clifford_sign;
use crate::algebra::{commutant, AlgebraElement, Field, GaussianRational, SparseOperator};
use crate::combinatorics::{Composition, IndexSet};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::sym::{QsymBasis, QsymElement};

pub type Operator = SparseOperator<GaussianRational>;

/// The basis vector `c_D ε_I`, of parity `|D| mod 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleBasisVector {
    pub d: IndexSet,
}

impl ModuleBasisVector {
    pub fn index(&self) -> usize {
        self.d.bits() as usize
    }

    pub fn parity(&self) -> usize {
        self.d.len() % 2
    }
}

/// `M_I` with its generators realized as `2^n × 2^n` matrices.
#[derive(Clone, Debug)]
pub struct HclModule {
    composition: Composition,
    n: usize,
    t_ops: Vec<Operator>,
    c_ops: Vec<Operator>,
}

fn unit(v: i64) -> GaussianRational {
    GaussianRational::from_i64(v)
}

impl HclModule {
    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// `T_k` for `k ∈ [1, n-1]`.
    pub fn t(&self, k: usize) -> &Operator {
        &self.t_ops[k - 1]
    }

    /// `c_j` for `j ∈ [1, n]`.
    pub fn c(&self, j: usize) -> &Operator {
        &self.c_ops[j - 1]
    }

    pub fn t_ops(&self) -> &[Operator] {
        &self.t_ops
    }

    pub fn c_ops(&self) -> &[Operator] {
        &self.c_ops
    }

    /// Clifford generators first, then `T_1, …, T_{n-1}`.
    pub fn generators(&self) -> Vec<&Operator> {
        self.c_ops.iter().chain(self.t_ops.iter()).collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = ModuleBasisVector> + '_ {
        (0..self.dim() as u64).map(move |bits| ModuleBasisVector { d: IndexSet::from_bits(self.n, bits) })
    }
}

/// `T_k c_D ε_I` by the two-box rules, as `(coefficient, D')` pairs.
pub(crate) fn t_action(k: usize, des: &IndexSet, d: &IndexSet) -> Vec<(i64, IndexSet)> {
    let (has_k, has_k1) = (d.contains(k), d.contains(k + 1));
    if !des.contains(k) {
        match (has_k, has_k1) {
            (_, false) => vec![],
            (false, true) => vec![(-1, *d), (1, d.without(k + 1).with(k))],
            (true, true) => vec![(-1, *d), (1, d.without(k).without(k + 1))],
        }
    } else {
        match (has_k, has_k1) {
            (false, false) => vec![(-1, *d)],
            (true, false) => vec![(-1, d.without(k).with(k + 1))],
            (false, true) => vec![(-1, *d)],
            (true, true) => vec![(1, d.without(k).without(k + 1))],
        }
    }
}

/// Builds `M_I` for `n ≤` the configured operator bound.
pub fn build_module(i: &Composition) -> Result<HclModule> {
    let n = i.size();
    if n == 0 {
        return Err(Error::invalid("M_I needs n >= 1"));
    }
    Error::check_bound("module size n", n, Bounds::global().operator_n)?;
    let des = i.descents();
    let subsets: Vec<IndexSet> = (0..1u64 << n).map(|b| IndexSet::from_bits(n, b)).collect();
    let t_ops = (1..n)
        .map(|k| {
            let triplets = subsets.iter().flat_map(|d| {
                t_action(k, &des, d)
                    .into_iter()
                    .map(move |(v, e)| (e.bits() as usize, d.bits() as usize, unit(v)))
            });
            Operator::from_triplets(1 << n, triplets)
        })
        .collect();
    let c_ops = (1..=n)
        .map(|j| {
            let triplets = subsets.iter().map(|d| {
                let (sign, e) = clifford_sign(j, d);
                (e.bits() as usize, d.bits() as usize, unit(sign as i64))
            });
            Operator::from_triplets(1 << n, triplets)
        })
        .collect();
    Ok(HclModule { composition: i.clone(), n, t_ops, c_ops })
}

/// Checks every defining relation of `HCl_n(0)` as an operator identity and
/// reports the first one that fails.
pub fn verify_relations(m: &HclModule) -> Result<()> {
    let n = m.n;
    let id = Operator::identity(m.dim());
    let fail = |what: String| Err(Error::internal(format!("relation {what} fails on M_{}", m.composition)));
    for i in 1..n {
        let t = m.t(i);
        if t.compose(t) != t.scale(&unit(-1)) {
            return fail(format!("T_{i}^2 = -T_{i}"));
        }
        for j in i + 2..n {
            if t.compose(m.t(j)) != m.t(j).compose(t) {
                return fail(format!("T_{i} T_{j} = T_{j} T_{i}"));
            }
        }
        if i + 1 < n {
            let u = m.t(i + 1);
            if t.compose(u).compose(t) != u.compose(t).compose(u) {
                return fail(format!("T_{i} T_{} T_{i} = T_{} T_{i} T_{}", i + 1, i + 1, i + 1));
            }
        }
    }
    for i in 1..=n {
        let c = m.c(i);
        if c.compose(c) != id.scale(&unit(-1)) {
            return fail(format!("c_{i}^2 = -1"));
        }
        for j in i + 1..=n {
            if c.compose(m.c(j)) != m.c(j).compose(c).scale(&unit(-1)) {
                return fail(format!("c_{i} c_{j} = -c_{j} c_{i}"));
            }
        }
    }
    for i in 1..n {
        let t = m.t(i);
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            if t.compose(m.c(j)) != m.c(j).compose(t) {
                return fail(format!("T_{i} c_{j} = c_{j} T_{i}"));
            }
        }
        if t.compose(m.c(i)) != m.c(i + 1).compose(t) {
            return fail(format!("T_{i} c_{i} = c_{} T_{i}", i + 1));
        }
        let t1 = t.add(&id);
        if t1.compose(m.c(i + 1)) != m.c(i).compose(&t1) {
            return fail(format!("(T_{i} + 1) c_{} = c_{i} (T_{i} + 1)", i + 1));
        }
    }
    Ok(())
}

/// Diagonal coefficient of `T_k` at `c_D ε_I`: `-1` iff
/// (`k+1 ∈ D` and `k ∉ Des(I)`) or (`k ∉ D` and `k ∈ Des(I)`), else `0`.
pub fn alpha(k: usize, i: &Composition, d: &IndexSet) -> i64 {
    let des = i.descents();
    if (d.contains(k + 1) && !des.contains(k)) || (!d.contains(k) && des.contains(k)) {
        -1
    } else {
        0
    }
}

/// `K(D, I)`, the composition with `Des(K) = {k : α(k, I, D) = -1}`.
fn k_of(i: &Composition, d: &IndexSet) -> Composition {
    let n = i.size();
    let des = IndexSet::new(n, (1..n).filter(|&k| alpha(k, i, d) == -1).collect::<Vec<_>>()).unwrap();
    Composition::from_descents(&des, n).unwrap()
}

/// `ch(Res M_I) = Σ_{D ⊆ [1,n]} F_{K(D,I)}`, from the eigenvalue rule.
pub fn frobenius_res(i: &Composition) -> QsymElement {
    let n = i.size();
    let mut terms = AlgebraElement::zero();
    for bits in 0..1u64 << n {
        terms.add_term(k_of(i, &IndexSet::from_bits(n, bits)), crate::algebra::rat(1));
    }
    QsymElement::from_terms(QsymBasis::F, terms)
}

/// The same characteristic read off the operators: each `T_k` is
/// triangular along `≤_I`, so its diagonal entries are the eigenvalues on
/// the composition factors.
pub fn frobenius_res_from_series(m: &HclModule) -> Result<QsymElement> {
    let n = m.n;
    let mut terms = AlgebraElement::zero();
    for v in m.basis() {
        let idx = v.index();
        let mut des = Vec::new();
        for k in 1..n {
            let diag = m.t(k).get(idx, idx);
            if diag == unit(-1) {
                des.push(k);
            } else if !diag.is_zero() {
                return Err(Error::internal(format!("T_{k} has diagonal entry {diag} at {}", v.d)));
            }
        }
        let k = Composition::from_descents(&IndexSet::new(n, des)?, n)?;
        terms.add_term(k, crate::algebra::rat(1));
    }
    Ok(QsymElement::from_terms(QsymBasis::F, terms))
}

/// `dim End_{HCl_n(0)}(M_I)`, as the commutant of all generators.
pub fn endomorphism_dim(i: &Composition) -> Result<usize> {
    let m = build_module(i)?;
    let gens: Vec<Operator> = m.generators().into_iter().cloned().collect();
    Ok(commutant(&gens, Bounds::global().commutant_dim)?.dimension)
}

/// True when `f ∘ g_I = g_J ∘ f` for every generator `g`.
pub fn intertwines(f: &Operator, from: &HclModule, to: &HclModule) -> bool {
    from.n == to.n
        && from
            .generators()
            .into_iter()
            .zip(to.generators())
            .all(|(a, b)| f.compose(a) == b.compose(f))
}

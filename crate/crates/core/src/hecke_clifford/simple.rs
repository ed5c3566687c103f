//! The simple supermodules `HClS_I = Cl_n e_I ε_I`.

use super::clifford::{clifford_multiply, clifford_word, CliffordElement};
use super::module::{build_module, HclModule};
use crate::algebra::{ratio, Echelon, GaussianRational, SparseVec};
use crate::combinatorics::{Composition, IndexSet};
use crate::error::{Error, Result};
use crate::peak::theta_fun;
use crate::sym::QsymElement;

fn require_peak_composition(i: &Composition) -> Result<()> {
    if i.is_empty() || !i.is_peak_composition() {
        return Err(Error::invalid(format!("{i} is not a peak composition")));
    }
    Ok(())
}

/// `⌊(|P|+1)/2⌋`, the number of idempotent factors.
fn half_valleys(i: &Composition) -> usize {
    i.valleys().len() / 2
}

/// `e_I = 2^{-l} ∏_{j=1}^{l} (1 + √-1 c_{v_{2j-1}} c_{v_{2j}})` over the
/// sorted valleys `v₁ < v₂ < ⋯`, `l = ⌊|V|/2⌋`. Defined for every
/// nonempty composition.
pub fn minimal_idempotent(i: &Composition) -> Result<CliffordElement> {
    if i.is_empty() {
        return Err(Error::invalid("the empty composition has no idempotent"));
    }
    let n = i.size();
    let v = i.valleys().to_vec();
    let l = v.len() / 2;
    let mut e = clifford_word(IndexSet::empty(n));
    for j in 0..l {
        let mut factor = clifford_word(IndexSet::empty(n));
        factor.add_term(IndexSet::new(n, [v[2 * j], v[2 * j + 1]])?, GaussianRational::i());
        e = clifford_multiply(&e, &factor);
    }
    Ok(e.scale(&GaussianRational::real(ratio(1, 1i64 << l))))
}

/// `dim HClS_I = 2^{n - ⌊(|P|+1)/2⌋}`.
pub fn simple_dimension(i: &Composition) -> usize {
    1 << (i.size() - half_valleys(i))
}

/// `ch(HClS_I) = 2^{-⌊(|P|+1)/2⌋} Θ_{HP(I)}`.
pub fn ch_simple(i: &Composition) -> Result<QsymElement> {
    require_peak_composition(i)?;
    let theta = theta_fun(&i.peak_set(), i.size())?;
    Ok(theta.scale(&ratio(1, 1i64 << half_valleys(i))))
}

/// A subspace of a module, stored as an echelon basis.
#[derive(Clone, Debug)]
pub struct SubModule {
    parent: HclModule,
    basis: Echelon<GaussianRational>,
}

impl SubModule {
    pub fn parent(&self) -> &HclModule {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &[SparseVec<GaussianRational>] {
        self.basis.rows()
    }

    pub fn contains(&self, v: &SparseVec<GaussianRational>) -> bool {
        self.basis.contains(v)
    }

    /// Closed under every `T_i` and `c_j`.
    pub fn is_stable(&self) -> bool {
        self.parent
            .generators()
            .into_iter()
            .all(|g| self.basis().iter().all(|v| self.contains(&g.apply(v))))
    }

    /// Every echelon basis vector generates the whole subspace. The basis
    /// is built parity by parity, so these vectors are homogeneous.
    pub fn is_cyclic_from_every_basis_vector(&self) -> bool {
        self.basis().iter().all(|v| generated_dimension(&self.parent, v) == self.dim())
    }
}

/// Dimension of the submodule generated by `v`.
pub fn generated_dimension(m: &HclModule, v: &SparseVec<GaussianRational>) -> usize {
    let gens = m.generators();
    let mut ech = Echelon::new();
    let mut queue = vec![v.clone()];
    ech.insert(v);
    while let Some(w) = queue.pop() {
        for g in &gens {
            let image = g.apply(&w);
            if ech.insert(&image) {
                queue.push(image);
            }
        }
    }
    ech.rank()
}

/// `c_D e_I ε_I` as a vector of `M_I`.
fn vector_of(x: &CliffordElement) -> SparseVec<GaussianRational> {
    SparseVec::from_pairs(x.iter().map(|(d, c)| (d.bits() as usize, c.clone())))
}

/// `HClS_I`, spanned by `{c_D e_I ε_I : D ⊆ [1, n]}`.
pub fn simple_module(i: &Composition) -> Result<SubModule> {
    require_peak_composition(i)?;
    let e = minimal_idempotent(i)?;
    let parent = build_module(i)?;
    let n = i.size();
    let mut even = Echelon::new();
    let mut odd = Echelon::new();
    for bits in 0..1u64 << n {
        let d = IndexSet::from_bits(n, bits);
        let v = vector_of(&clifford_multiply(&clifford_word(d), &e));
        if d.len() % 2 == 0 {
            even.insert(&v);
        } else {
            odd.insert(&v);
        }
    }
    let mut basis = even;
    for v in odd.rows() {
        basis.insert(v);
    }
    Ok(SubModule { parent, basis })
}

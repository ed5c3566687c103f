//! Noncommutative symmetric functions in the complete (`S`) and ribbon
//! (`R`) bases, with the internal product realized in the group algebra of
//! the symmetric group.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{fmt_terms, homogeneous_degree};
use crate::algebra::{AlgebraElement, Field, Rational};
use crate::combinatorics::{all_permutations, Composition, IndexSet, Permutation};
use crate::config::Bounds;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NsfBasis {
    S,
    R,
}

impl NsfBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            NsfBasis::S => "S",
            NsfBasis::R => "R",
        }
    }
}

/// An element of `Sym`, stored in one of the two bases.
#[derive(Clone, PartialEq, Eq)]
pub struct NsfElement {
    basis: NsfBasis,
    terms: AlgebraElement<Composition>,
}

impl NsfElement {
    pub fn zero(basis: NsfBasis) -> Self {
        NsfElement { basis, terms: AlgebraElement::zero() }
    }

    pub fn one(basis: NsfBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: NsfBasis, i: Composition) -> Self {
        NsfElement { basis, terms: AlgebraElement::monomial(i) }
    }

    pub fn ribbon(i: Composition) -> Self {
        Self::basis_element(NsfBasis::R, i)
    }

    /// `S^I = S_{i₁} ⋯ S_{i_r}`.
    pub fn complete(i: Composition) -> Self {
        Self::basis_element(NsfBasis::S, i)
    }

    /// `S_n`.
    pub fn s(n: usize) -> Self {
        Self::complete(Composition::row(n))
    }

    /// `Λ_n = R_{(1^n)}`.
    pub fn lambda(n: usize) -> Self {
        Self::ribbon(Composition::column(n))
    }

    pub fn from_terms(basis: NsfBasis, terms: AlgebraElement<Composition>) -> Self {
        NsfElement { basis, terms }
    }

    pub fn basis(&self) -> NsfBasis {
        self.basis
    }

    pub fn terms(&self) -> &AlgebraElement<Composition> {
        &self.terms
    }

    pub fn coefficient(&self, i: &Composition) -> Rational {
        self.terms.coefficient(i)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        homogeneous_degree(&self.terms)
    }

    /// The degree-`n` part.
    pub fn component(&self, n: usize) -> Self {
        let terms = self.terms.iter().filter(|(i, _)| i.size() == n).map(|(i, c)| (i.clone(), c.clone()));
        NsfElement { basis: self.basis, terms: terms.collect() }
    }

    /// Sorted list of the degrees that carry nonzero terms.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.support().map(|i| i.size()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_basis(&self, basis: NsfBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let terms = match basis {
            NsfBasis::R => self.terms.linear_map(|i| s_to_r(i).terms),
            NsfBasis::S => self.terms.linear_map(|i| r_to_s(i).terms),
        };
        NsfElement { basis, terms }
    }

    pub fn to_r(&self) -> Self {
        self.to_basis(NsfBasis::R)
    }

    pub fn to_s(&self) -> Self {
        self.to_basis(NsfBasis::S)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        NsfElement { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &Self) -> Self {
        NsfElement { basis: self.basis, terms: &self.terms + &other.to_basis(self.basis).terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        NsfElement { basis: self.basis, terms: &self.terms - &other.to_basis(self.basis).terms }
    }

    /// Product, expressed in the basis of `self`.
    pub fn product(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let terms = match self.basis {
            NsfBasis::S => self.terms.bilinear(&other.terms, |i, j| AlgebraElement::monomial(i.concat(j))),
            NsfBasis::R => self.terms.bilinear(&other.terms, ribbon_product),
        };
        NsfElement { basis: self.basis, terms }
    }

    /// Equality as elements of `Sym`, regardless of the stored basis.
    pub fn same_as(&self, other: &Self) -> bool {
        self.terms == other.to_basis(self.basis).terms
    }
}

impl fmt::Display for NsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.symbol(), &self.terms)
    }
}

impl fmt::Debug for NsfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `R_I R_J = R_{I·J} + R_{I▷J}`, with `R_∅ = 1`.
fn ribbon_product(i: &Composition, j: &Composition) -> AlgebraElement<Composition> {
    if i.is_empty() || j.is_empty() {
        return AlgebraElement::monomial(i.concat(j));
    }
    let mut out = AlgebraElement::monomial(i.concat(j));
    out.add_term(i.fuse(j), Rational::one());
    out
}

/// `S^I = Σ_{Des(J) ⊆ Des(I)} R_J`.
pub fn s_to_r(i: &Composition) -> NsfElement {
    let terms = i.coarsenings().into_iter().map(|j| (j, Rational::one())).collect();
    NsfElement::from_terms(NsfBasis::R, terms)
}

/// `R_I = Σ_{Des(J) ⊆ Des(I)} (-1)^{|Des(I)|-|Des(J)|} S^J`.
pub fn r_to_s(i: &Composition) -> NsfElement {
    let terms = i
        .coarsenings()
        .into_iter()
        .map(|j| {
            let sign = if (i.len() - j.len()) % 2 == 0 { 1 } else { -1 };
            (j, Rational::from_i64(sign))
        })
        .collect();
    NsfElement::from_terms(NsfBasis::S, terms)
}

/// An element of `Sym ⊗ Sym`, both factors in the same basis.
#[derive(Clone, PartialEq, Eq)]
pub struct NsfTensor {
    basis: NsfBasis,
    terms: AlgebraElement<(Composition, Composition)>,
}

impl NsfTensor {
    pub fn zero(basis: NsfBasis) -> Self {
        NsfTensor { basis, terms: AlgebraElement::zero() }
    }

    /// `x ⊗ y`, in the basis of `x`.
    pub fn pure(x: &NsfElement, y: &NsfElement) -> Self {
        let y = y.to_basis(x.basis);
        let terms = x.terms.bilinear(&y.terms, |i, j| AlgebraElement::monomial((i.clone(), j.clone())));
        NsfTensor { basis: x.basis, terms }
    }

    pub fn basis(&self) -> NsfBasis {
        self.basis
    }

    pub fn terms(&self) -> &AlgebraElement<(Composition, Composition)> {
        &self.terms
    }

    pub fn coefficient(&self, i: &Composition, j: &Composition) -> Rational {
        self.terms.coefficient(&(i.clone(), j.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        NsfTensor { basis: self.basis, terms: &self.terms + &other.to_basis(self.basis).terms }
    }

    pub fn to_basis(&self, basis: NsfBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(basis);
        for ((i, j), c) in self.terms.iter() {
            let a = NsfElement::basis_element(self.basis, i.clone()).to_basis(basis);
            let b = NsfElement::basis_element(self.basis, j.clone()).to_basis(basis);
            out.terms.add_scaled(&Self::pure(&a, &b).terms, c);
        }
        out
    }

    pub fn to_r(&self) -> Self {
        self.to_basis(NsfBasis::R)
    }
}

impl fmt::Debug for NsfTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| format!("{c}*{sym}{i}⊗{sym}{j}"))
            .collect();
        write!(f, "{}", if terms.is_empty() { "0".to_string() } else { terms.join(" + ") })
    }
}

/// `Δ`, the algebra morphism with `Δ S_n = Σ_{i+j=n} S_i ⊗ S_j`. The result
/// is in the `S ⊗ S` basis.
pub fn coproduct(x: &NsfElement) -> NsfTensor {
    let x = x.to_s();
    let mut out = NsfTensor::zero(NsfBasis::S);
    for (i, c) in x.terms.iter() {
        let mut splits: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
        for &part in i.parts() {
            splits = splits
                .into_iter()
                .flat_map(|(l, r)| {
                    (0..=part).map(move |a| {
                        let (mut l, mut r) = (l.clone(), r.clone());
                        if a > 0 {
                            l.push(a);
                        }
                        if a < part {
                            r.push(part - a);
                        }
                        (l, r)
                    })
                })
                .collect();
        }
        for (l, r) in splits {
            out.terms.add_term((Composition::new(l).unwrap(), Composition::new(r).unwrap()), c.clone());
        }
    }
    out
}

/// Permutations of `n` letters grouped by descent set (keyed by the bit mask
/// of the set).
struct DescentClasses {
    perms: Vec<Permutation>,
    by_class: HashMap<u64, Vec<usize>>,
}

fn descent_bits(p: &[u8]) -> u64 {
    let mut bits = 0u64;
    for i in 1..p.len() {
        if p[i - 1] > p[i] {
            bits |= 1 << (i - 1);
        }
    }
    bits
}

fn descent_classes(n: usize) -> Result<Arc<DescentClasses>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DescentClasses>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let perms = all_permutations(n, Bounds::global().oracle_n)?;
    let mut by_class: HashMap<u64, Vec<usize>> = HashMap::new();
    for (idx, p) in perms.iter().enumerate() {
        by_class.entry(descent_bits(p.one_line())).or_default().push(idx);
    }
    let classes = Arc::new(DescentClasses { perms, by_class });
    cache.lock().unwrap().insert(n, classes.clone());
    Ok(classes)
}

fn require_homogeneous(x: &NsfElement, n: usize) -> Result<NsfElement> {
    let x = x.to_r();
    if x.terms.support().any(|i| i.size() != n) {
        return Err(Error::invalid(format!("element {x} is not homogeneous of degree {n}")));
    }
    Ok(x)
}

/// The image of `x ∈ Sym_n` in the group algebra of `𝔖_n`, sending `R_I` to
/// the sum of the permutations with descent set `Des(I)`.
pub fn to_descent_algebra(x: &NsfElement, n: usize) -> Result<AlgebraElement<Permutation>> {
    let x = require_homogeneous(x, n)?;
    let classes = descent_classes(n)?;
    let mut out = AlgebraElement::zero();
    for (i, c) in x.terms.iter() {
        if let Some(members) = classes.by_class.get(&i.descents().bits()) {
            for &m in members {
                out.add_term(classes.perms[m].clone(), c.clone());
            }
        }
    }
    Ok(out)
}

/// Inverse of [`to_descent_algebra`]; fails unless the coefficients are
/// constant on descent classes.
pub fn from_descent_algebra(g: &AlgebraElement<Permutation>, n: usize) -> Result<NsfElement> {
    let mut terms = AlgebraElement::zero();
    let mut seen: HashMap<u64, Rational> = HashMap::new();
    for (p, c) in g.iter() {
        if p.n() != n {
            return Err(Error::invalid(format!("permutation {p} is not in S_{n}")));
        }
        seen.insert(descent_bits(p.one_line()), c.clone());
    }
    let classes = descent_classes(n)?;
    for (bits, members) in &classes.by_class {
        let c = seen.get(bits).cloned().unwrap_or_else(Rational::zero);
        if members.iter().any(|&m| g.coefficient(&classes.perms[m]) != c) {
            return Err(Error::NotInSpan { residual: format!("coefficients vary on descent class {bits:#b}") });
        }
        let set = IndexSet::from_bits(n, *bits);
        terms.add_term(Composition::from_descents(&set, n)?, c);
    }
    Ok(NsfElement::from_terms(NsfBasis::R, terms))
}

/// Naive product in the group algebra, `(στ)(i) = σ(τ(i))`.
pub fn group_algebra_product(
    a: &AlgebraElement<Permutation>,
    b: &AlgebraElement<Permutation>,
) -> AlgebraElement<Permutation> {
    a.bilinear(b, |s, t| AlgebraElement::monomial(s.compose(t)))
}

/// `Φ⁻¹(Φ(a) Φ(b))` for homogeneous `a`, `b` of degree `n`, where `Φ` is
/// [`to_descent_algebra`]. The coefficient of each class is read off one
/// representative `π`: `Σ_σ a_σ b_{σ⁻¹π}`.
fn descent_product(a: &NsfElement, b: &NsfElement, n: usize) -> Result<NsfElement> {
    let a = require_homogeneous(a, n)?;
    let b = require_homogeneous(b, n)?;
    let classes = descent_classes(n)?;
    let b_by_bits: HashMap<u64, Rational> = b.terms.iter().map(|(i, c)| (i.descents().bits(), c.clone())).collect();
    let inverses: Vec<(Permutation, Rational)> = a
        .terms
        .iter()
        .flat_map(|(i, c)| {
            classes.by_class.get(&i.descents().bits()).into_iter().flatten().map(move |&m| (m, c))
        })
        .map(|(m, c)| (classes.perms[m].inverse(), c.clone()))
        .collect();
    let mut terms = AlgebraElement::zero();
    for (bits, members) in &classes.by_class {
        let pi = &classes.perms[members[0]];
        let mut acc = Rational::zero();
        for (sigma_inv, c) in &inverses {
            let tau = sigma_inv.compose(pi);
            if let Some(bc) = b_by_bits.get(&descent_bits(tau.one_line())) {
                acc = acc.add_ref(&c.mul_ref(bc));
            }
        }
        terms.add_term(Composition::from_descents(&IndexSet::from_bits(n, *bits), n)?, acc);
    }
    Ok(NsfElement::from_terms(NsfBasis::R, terms))
}

/// The internal product `x ∗ y`, computed degree by degree; components of
/// different degrees multiply to zero.
///
/// `Sym_n` with `∗` is anti-isomorphic to the descent algebra, so
/// `x ∗ y = Φ⁻¹(Φ(y) Φ(x))` with `Φ` = [`to_descent_algebra`] and
/// permutations composed as functions. This is the order under which
/// `θ₋₁(x) = x ∗ σ̃₁` holds; the reverse order fails it already in degree 3.
pub fn internal_product(x: &NsfElement, y: &NsfElement) -> Result<NsfElement> {
    let x = x.to_r();
    let y = y.to_r();
    let (dx, dy) = (x.degrees(), y.degrees());
    if dx.len() == 1 && dy.len() == 1 && dx != dy {
        log::warn!("internal product of elements of degrees {} and {} is zero", dx[0], dy[0]);
    }
    let mut out = NsfElement::zero(NsfBasis::R);
    for n in dx.into_iter().filter(|n| dy.contains(n)) {
        let part = descent_product(&y.component(n), &x.component(n), n)?;
        out = out.add(&part);
    }
    Ok(out)
}

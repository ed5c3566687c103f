//! Quasi-symmetric functions in the monomial (`M`) and fundamental (`F`)
//! bases.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::ncsf::NsfElement;
use super::{fmt_terms, homogeneous_degree};
use crate::algebra::{AlgebraElement, Field, Rational};
use crate::combinatorics::Composition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QsymBasis {
    M,
    F,
}

impl QsymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            QsymBasis::M => "M",
            QsymBasis::F => "F",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QsymElement {
    basis: QsymBasis,
    terms: AlgebraElement<Composition>,
}

impl QsymElement {
    pub fn zero(basis: QsymBasis) -> Self {
        QsymElement { basis, terms: AlgebraElement::zero() }
    }

    pub fn one(basis: QsymBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: QsymBasis, i: Composition) -> Self {
        QsymElement { basis, terms: AlgebraElement::monomial(i) }
    }

    pub fn monomial(i: Composition) -> Self {
        Self::basis_element(QsymBasis::M, i)
    }

    pub fn fundamental(i: Composition) -> Self {
        Self::basis_element(QsymBasis::F, i)
    }

    pub fn from_terms(basis: QsymBasis, terms: AlgebraElement<Composition>) -> Self {
        QsymElement { basis, terms }
    }

    pub fn basis(&self) -> QsymBasis {
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

    /// The common size of all keys, if the element is homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        homogeneous_degree(&self.terms)
    }

    pub fn to_basis(&self, basis: QsymBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let terms = match basis {
            QsymBasis::M => self.terms.linear_map(|i| f_to_m(i).terms),
            QsymBasis::F => self.terms.linear_map(|i| m_to_f(i).terms),
        };
        QsymElement { basis, terms }
    }

    pub fn to_m(&self) -> Self {
        self.to_basis(QsymBasis::M)
    }

    pub fn to_f(&self) -> Self {
        self.to_basis(QsymBasis::F)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QsymElement { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &Self) -> Self {
        QsymElement { basis: self.basis, terms: &self.terms + &other.to_basis(self.basis).terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QsymElement { basis: self.basis, terms: &self.terms - &other.to_basis(self.basis).terms }
    }

    /// Product, expressed in the basis of `self`.
    pub fn product(&self, other: &Self) -> Self {
        let terms = self
            .to_m()
            .terms
            .bilinear(&other.to_m().terms, |i, j| quasi_shuffle(i, j));
        QsymElement { basis: QsymBasis::M, terms }.to_basis(self.basis)
    }
}

impl fmt::Display for QsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.symbol(), &self.terms)
    }
}

impl fmt::Debug for QsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `F_I = Σ_{J refines I} M_J`.
pub fn f_to_m(i: &Composition) -> QsymElement {
    let terms = i.refinements().into_iter().map(|j| (j, Rational::one())).collect();
    QsymElement::from_terms(QsymBasis::M, terms)
}

/// `M_I = Σ_{J refines I} (-1)^{ℓ(J)-ℓ(I)} F_J`.
pub fn m_to_f(i: &Composition) -> QsymElement {
    let terms = i
        .refinements()
        .into_iter()
        .map(|j| {
            let sign = if (j.len() - i.len()) % 2 == 0 { 1 } else { -1 };
            (j, Rational::from_i64(sign))
        })
        .collect();
    QsymElement::from_terms(QsymBasis::F, terms)
}

/// `M_I · M_J` as a sum over quasi-shuffles of the parts of `I` and `J`.
pub fn quasi_shuffle(i: &Composition, j: &Composition) -> AlgebraElement<Composition> {
    type Cache = Mutex<HashMap<(Composition, Composition), AlgebraElement<Composition>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (i.clone(), j.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let result = if i.is_empty() || j.is_empty() {
        AlgebraElement::monomial(i.concat(j))
    } else {
        let (a, rest_i) = split_first(i);
        let (b, rest_j) = split_first(j);
        let mut out = AlgebraElement::zero();
        for (head, tail) in [
            (a, quasi_shuffle(&rest_i, j)),
            (b, quasi_shuffle(i, &rest_j)),
            (a + b, quasi_shuffle(&rest_i, &rest_j)),
        ] {
            let prefix = Composition::row(head);
            out.add_scaled(&tail.map_keys(|k| prefix.concat(k)), &Rational::one());
        }
        out
    };
    cache.lock().unwrap().insert(key, result.clone());
    result
}

fn split_first(i: &Composition) -> (usize, Composition) {
    let parts = i.parts();
    (parts[0], Composition::new(parts[1..].to_vec()).unwrap())
}

/// The duality `⟨F_I, R_J⟩ = δ_{IJ}`, extended bilinearly.
pub fn pairing(g: &QsymElement, f: &NsfElement) -> Rational {
    let g = g.to_f();
    let f = f.to_r();
    let mut acc = Rational::zero();
    for (i, c) in g.terms().iter() {
        acc = acc.add_ref(&c.mul_ref(&f.coefficient(i)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn refinement_examples() {
        assert_eq!(f_to_m(&c("2")).to_string(), "M_[2] + M_[1,1]");
        assert_eq!(f_to_m(&c("1,1")).to_string(), "M_[1,1]");
        assert_eq!(m_to_f(&c("2")).to_string(), "F_[2] - F_[1,1]");
    }

    #[test]
    fn product_examples() {
        let m1 = QsymElement::monomial(c("1"));
        assert_eq!(m1.product(&m1).to_string(), "M_[2] + 2M_[1,1]");
        let f1 = QsymElement::fundamental(c("1"));
        assert_eq!(f1.product(&f1).to_string(), "F_[2] + F_[1,1]");
        assert_eq!(f1.product(&QsymElement::one(QsymBasis::F)), f1);
    }

    #[test]
    fn pairing_examples() {
        let f21 = QsymElement::fundamental(c("2,1"));
        assert_eq!(pairing(&f21, &NsfElement::ribbon(c("2,1"))), rat(1));
        assert_eq!(pairing(&f21, &NsfElement::ribbon(c("3"))), rat(0));
    }
}

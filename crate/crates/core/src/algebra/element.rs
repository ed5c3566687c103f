//! Sparse linear combinations of basis keys.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::scalar::{Field, Rational};

/// A finite linear combination `Σ c_k · k` of basis keys `k`.
///
/// Zero coefficients are never stored, so two elements are equal exactly when
/// their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<K: Ord, F: Field = Rational> {
    terms: BTreeMap<K, F>,
}

impl<K: Ord, F: Field> Default for AlgebraElement<K, F> {
    fn default() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, F: Field> AlgebraElement<K, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, F::one())
    }

    pub fn term(key: K, coeff: F) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, F)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Adds `coeff · key` in place, pruning the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add_ref(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &Self, scale: &F) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.mul_ref(scale));
        }
    }

    pub fn coefficient(&self, key: &K) -> F {
        self.terms.get(key).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keys with nonzero coefficient, in key order.
    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &F)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: &F) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.mul_ref(factor))).collect(),
        }
    }

    /// Re-keys every term; colliding keys are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> AlgebraElement<K2, F> {
        AlgebraElement::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Extends `f` linearly: `Σ c_k f(k)`.
    pub fn linear_map<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> AlgebraElement<K2, F>,
    ) -> AlgebraElement<K2, F> {
        let mut out = AlgebraElement::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of `f` to pairs of elements.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &AlgebraElement<K2, F>,
        mut f: impl FnMut(&K, &K2) -> AlgebraElement<K3, F>,
    ) -> AlgebraElement<K3, F> {
        let mut out = AlgebraElement::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_scaled(&f(k1, k2), &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, F> {
        self.terms
    }
}

impl<K: Ord + Clone, F: Field> Add for &AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn add(self, rhs: Self) -> AlgebraElement<K, F> {
        let mut out = self.clone();
        out.add_scaled(rhs, &F::one());
        out
    }
}

impl<K: Ord + Clone, F: Field> Add for AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn add(self, rhs: Self) -> AlgebraElement<K, F> {
        &self + &rhs
    }
}

impl<K: Ord + Clone, F: Field> Sub for &AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn sub(self, rhs: Self) -> AlgebraElement<K, F> {
        let mut out = self.clone();
        out.add_scaled(rhs, &F::one().neg_ref());
        out
    }
}

impl<K: Ord + Clone, F: Field> Sub for AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn sub(self, rhs: Self) -> AlgebraElement<K, F> {
        &self - &rhs
    }
}

impl<K: Ord + Clone, F: Field> Neg for &AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn neg(self) -> AlgebraElement<K, F> {
        self.scale(&F::one().neg_ref())
    }
}

impl<K: Ord + Clone, F: Field> Neg for AlgebraElement<K, F> {
    type Output = AlgebraElement<K, F>;
    fn neg(self) -> AlgebraElement<K, F> {
        -&self
    }
}

impl<K: Ord + Clone, F: Field> FromIterator<(K, F)> for AlgebraElement<K, F> {
    fn from_iter<T: IntoIterator<Item = (K, F)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + fmt::Debug, F: Field> fmt::Debug for AlgebraElement<K, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{k:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    type E = AlgebraElement<&'static str>;

    #[test]
    fn cancellation_prunes_terms() {
        let x = E::from_terms([("a", rat(2)), ("b", rat(-1))]);
        assert!((&x + &(-&x)).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn scale_and_coefficient() {
        let x = E::monomial("r2").scale(&rat(2));
        assert_eq!(x.coefficient(&"r2"), rat(2));
        assert_eq!(x.coefficient(&"r11"), rat(0));
        assert!(x.scale(&rat(0)).is_zero());
    }

    #[test]
    fn support_lists_nonzero_keys() {
        let x = &E::term("r2", rat(2)) + &E::term("r11", rat(3));
        let keys: Vec<_> = x.support().copied().collect();
        assert_eq!(keys, vec!["r11", "r2"]);
    }
}

//! The peak subalgebra of `Sym`, spanned by the peak classes `Π_P`, and its
//! image `Θ_P` in `QSym`.

mod hall_littlewood;
mod tangent;
mod theta;

pub use hall_littlewood::{hl_q, hl_q_matrix, hl_q_two_row};
pub use tangent::{expand_in_t, log_sigma_tilde, log_sigma_tilde_closed_form, tangent, tangent_basis};
pub use theta::{
    theta_adjoint, theta_fun, theta_matrix, theta_minus1, theta_q, theta_spectrum, theta_via_internal_product,
};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{rat, solve_combination, AlgebraElement, Rational, SparseVec};
use crate::combinatorics::{compositions, fibonacci, peak_composition, validate_peak_set, Composition, IndexSet};
use crate::error::{Error, Result};
use crate::sym::{NsfBasis, NsfElement};

/// Compositions of `n` grouped by peak set.
pub fn peak_classes(n: usize) -> Arc<BTreeMap<IndexSet, Vec<Composition>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BTreeMap<IndexSet, Vec<Composition>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut classes: BTreeMap<IndexSet, Vec<Composition>> = BTreeMap::new();
    for i in compositions(n) {
        classes.entry(i.peak_set()).or_default().push(i);
    }
    let classes = Arc::new(classes);
    cache.lock().unwrap().insert(n, classes.clone());
    classes
}

/// `Π_P = Σ_{HP(I) = P} R_I`.
pub fn pi_class(p: &IndexSet, n: usize) -> Result<NsfElement> {
    validate_peak_set(p, n)?;
    let classes = peak_classes(n);
    let members = classes.get(p).expect("every peak set has a nonempty class");
    let terms = members.iter().map(|i| (i.clone(), rat(1))).collect();
    Ok(NsfElement::from_terms(NsfBasis::R, terms))
}

/// `H_n = Σ_{k=0}^{n-1} R_{(1^k, n-k)}`, with `H_0 = 1`.
pub fn h_fun(n: usize) -> NsfElement {
    if n == 0 {
        return NsfElement::one(NsfBasis::R);
    }
    let terms = (0..n)
        .map(|k| {
            let mut parts = vec![1; k];
            parts.push(n - k);
            (Composition::new(parts).unwrap(), rat(1))
        })
        .collect();
    NsfElement::from_terms(NsfBasis::R, terms)
}

/// `S̃_n = θ₋₁(S_n) = 2H_n` for `n ≥ 1`, `S̃_0 = 1`.
pub fn s_tilde(n: usize) -> NsfElement {
    if n == 0 {
        h_fun(0)
    } else {
        h_fun(n).scale(&rat(2))
    }
}

/// `S̃_n = Σ_{i+j=n} Λ_i S_j`, computed independently of [`s_tilde`].
pub fn s_tilde_from_lambda(n: usize) -> NsfElement {
    (0..=n).fold(NsfElement::zero(NsfBasis::R), |acc, i| {
        acc.add(&NsfElement::lambda(i).product(&NsfElement::s(n - i)))
    })
}

/// True when the ribbon coefficients of every homogeneous component are
/// constant on peak classes.
pub fn is_peak_element(x: &NsfElement) -> bool {
    let x = x.to_r();
    x.degrees().into_iter().all(|n| {
        peak_classes(n).values().all(|members| {
            let first = x.coefficient(&members[0]);
            members.iter().all(|i| x.coefficient(i) == first)
        })
    })
}

/// `dim 𝒫_n = f_n`.
pub fn peak_dimension(n: usize) -> u64 {
    fibonacci(n)
}

/// Coordinates of a homogeneous peak element in the basis `Π_P`.
pub fn peak_coordinates(x: &NsfElement, n: usize) -> Result<BTreeMap<IndexSet, Rational>> {
    let x = x.to_r();
    if x.terms().support().any(|i| i.size() != n) {
        return Err(Error::invalid(format!("{x} is not homogeneous of degree {n}")));
    }
    if !is_peak_element(&x) {
        return Err(Error::NotInSpan { residual: format!("{x} is not constant on peak classes") });
    }
    let mut out = BTreeMap::new();
    for p in peak_classes(n).keys() {
        let c = x.coefficient(&peak_composition(p, n)?);
        if c != rat(0) {
            out.insert(*p, c);
        }
    }
    Ok(out)
}

/// A homogeneous element of `Sym` known to lie in the peak algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakElement {
    n: usize,
    inner: NsfElement,
}

impl PeakElement {
    pub fn new(x: NsfElement, n: usize) -> Result<Self> {
        peak_coordinates(&x, n)?;
        Ok(PeakElement { n, inner: x.to_r() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn as_nsf(&self) -> &NsfElement {
        &self.inner
    }

    pub fn into_nsf(self) -> NsfElement {
        self.inner
    }

    pub fn coordinates(&self) -> BTreeMap<IndexSet, Rational> {
        peak_coordinates(&self.inner, self.n).expect("checked at construction")
    }
}

/// Index of every composition of `n` in [`compositions`] order.
pub(crate) fn composition_index(n: usize) -> HashMap<Composition, usize> {
    compositions(n).into_iter().enumerate().map(|(k, i)| (i, k)).collect()
}

pub(crate) fn to_vector(terms: &AlgebraElement<Composition>, index: &HashMap<Composition, usize>) -> SparseVec<Rational> {
    SparseVec::from_pairs(terms.iter().map(|(i, c)| (index[i], c.clone())))
}

/// Solves `x = Σ c_k basis[k]` in degree `n`.
pub(crate) fn solve_in(basis: &[NsfElement], x: &NsfElement, n: usize) -> Result<Vec<Rational>> {
    let index = composition_index(n);
    let vectors: Vec<SparseVec<Rational>> = basis.iter().map(|b| to_vector(b.to_r().terms(), &index)).collect();
    solve_combination(&vectors, &to_vector(x.to_r().terms(), &index))
        .map_err(|residual| Error::NotInSpan { residual: format!("{residual:?}") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::peak_sets;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn pi_class_examples() {
        assert_eq!(pi_class(&IndexSet::empty(2), 2).unwrap().to_string(), "R_[2] + R_[1,1]");
        assert_eq!(pi_class(&IndexSet::new(3, [2]).unwrap(), 3).unwrap().to_string(), "R_[2,1]");
        assert_eq!(pi_class(&IndexSet::empty(1), 1).unwrap().to_string(), "R_[1]");
        assert!(pi_class(&IndexSet::new(4, [2, 3]).unwrap(), 4).is_err());
    }

    #[test]
    fn hooks_and_s_tilde() {
        assert_eq!(h_fun(3).to_string(), "R_[3] + R_[1,2] + R_[1,1,1]");
        assert_eq!(s_tilde(1).to_string(), "2R_[1]");
        for n in 0..7 {
            assert!(s_tilde(n).same_as(&s_tilde_from_lambda(n)), "n = {n}");
        }
    }

    #[test]
    fn peak_element_examples() {
        assert!(is_peak_element(&NsfElement::ribbon(c("2,1"))));
        assert!(!is_peak_element(&NsfElement::ribbon(c("3"))));
        for n in 1..7 {
            for p in peak_sets(n) {
                assert!(is_peak_element(&pi_class(&p, n).unwrap()));
            }
        }
        assert_eq!(peak_dimension(4), 3);
    }

    #[test]
    fn coordinates_read_off_minimal_elements() {
        let x = pi_class(&IndexSet::new(4, [2]).unwrap(), 4).unwrap().scale(&rat(3));
        let coords = PeakElement::new(x, 4).unwrap().coordinates();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&IndexSet::new(4, [2]).unwrap()], rat(3));
    }
}

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{pi_class, s_tilde};
use crate::algebra::{minimal_polynomial, rat, AlgebraElement, Field, Polynomial, Rational, SparseOperator, SparseVec};
use crate::combinatorics::{compositions, validate_peak_set, Composition, IndexSet};
use crate::config::Bounds;
use crate::error::Result;
use crate::sym::{internal_product, NsfBasis, NsfElement, QsymBasis, QsymElement};

/// Valid peak sets contained in `Des(I) Δ (Des(I) + 1)`.
fn admissible_peak_sets(i: &Composition) -> Vec<IndexSet> {
    let n = i.size();
    if n < 3 {
        return vec![IndexSet::empty(n)];
    }
    let des = i.descents();
    let window = des.symmetric_difference(&des.shift_up()).restrict(2, n - 1);
    window.subsets().filter(|p| p.is_sparse()).collect()
}

/// `θ₋₁(R_I) = Σ_{P ⊆ Des(I) Δ (Des(I)+1)} 2^{|P|+1} Π_P`, extended linearly.
pub fn theta_minus1(x: &NsfElement) -> NsfElement {
    let terms = x.to_r().terms().linear_map(|i| {
        let n = i.size();
        if n == 0 {
            return AlgebraElement::monomial(Composition::empty());
        }
        let mut out = AlgebraElement::zero();
        for p in admissible_peak_sets(i) {
            let weight = rat(1i64 << (p.len() + 1));
            out.add_scaled(pi_class(&p, n).unwrap().terms(), &weight);
        }
        out
    });
    NsfElement::from_terms(NsfBasis::R, terms)
}

/// The ring morphism `θ_q` with `S_n ↦ Σ_{i+j=n} (-q)^i Λ_i S_j`. The result
/// is in the ribbon basis.
pub fn theta_q(x: &NsfElement, q: &Rational) -> NsfElement {
    let mut images: HashMap<usize, NsfElement> = HashMap::new();
    let mut image_of = |n: usize| {
        images
            .entry(n)
            .or_insert_with(|| {
                let mut power = rat(1);
                let mut acc = NsfElement::zero(NsfBasis::R);
                for i in 0..=n {
                    let term = NsfElement::lambda(i).product(&NsfElement::s(n - i));
                    acc = acc.add(&term.scale(&power));
                    power = power.mul_ref(&q.neg_ref());
                }
                acc
            })
            .clone()
    };
    let terms = x.to_s().terms().linear_map(|i| {
        i.parts()
            .iter()
            .fold(NsfElement::one(NsfBasis::R), |acc, &part| acc.product(&image_of(part)))
            .terms()
            .clone()
    });
    NsfElement::from_terms(NsfBasis::R, terms)
}

/// `x ∗ σ̃₁`, degree by degree.
pub fn theta_via_internal_product(x: &NsfElement) -> Result<NsfElement> {
    let x = x.to_r();
    let mut out = NsfElement::zero(NsfBasis::R);
    for n in x.degrees() {
        let part = x.component(n);
        let image = if n == 0 { part } else { internal_product(&part, &s_tilde(n))? };
        out = out.add(&image);
    }
    Ok(out)
}

/// `Θ_P = 2^{|P|+1} Σ_{P ⊆ Des(I) Δ (Des(I)+1)} F_I`.
pub fn theta_fun(p: &IndexSet, n: usize) -> Result<QsymElement> {
    validate_peak_set(p, n)?;
    let weight = rat(1i64 << (p.len() + 1));
    let terms = compositions(n)
        .into_iter()
        .filter(|i| {
            let des = i.descents();
            p.is_subset(&des.symmetric_difference(&des.shift_up()))
        })
        .map(|i| (i, weight.clone()))
        .collect();
    Ok(QsymElement::from_terms(QsymBasis::F, terms))
}

/// Matrix of `θ₋₁` on `Sym_n` in the ribbon basis: column `J` holds
/// `θ₋₁(R_J)`, rows and columns in [`compositions`] order.
pub fn theta_matrix(n: usize) -> Arc<SparseOperator<Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SparseOperator<Rational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let comps = compositions(n);
    let index = super::composition_index(n);
    let cols = comps
        .iter()
        .map(|j| super::to_vector(theta_minus1(&NsfElement::ribbon(j.clone())).terms(), &index))
        .collect::<Vec<SparseVec<Rational>>>();
    let op = Arc::new(SparseOperator::from_columns(cols));
    cache.lock().unwrap().insert(n, op.clone());
    op
}

/// `ϑ`, the adjoint of `θ₋₁` under `⟨F_I, R_J⟩ = δ_{IJ}`:
/// `ϑ(F_I) = Σ_J ⟨F_I, θ₋₁(R_J)⟩ F_J`. The result is in the `F` basis.
pub fn theta_adjoint(g: &QsymElement) -> QsymElement {
    let g = g.to_f();
    let mut out = AlgebraElement::zero();
    for (i, c) in g.terms().iter() {
        let n = i.size();
        let transpose = theta_matrix(n).transpose();
        let comps = compositions(n);
        let row = super::composition_index(n)[i];
        for (j, v) in transpose.column(row).iter() {
            out.add_term(comps[j].clone(), v.mul_ref(c));
        }
    }
    QsymElement::from_terms(QsymBasis::F, out)
}

/// Minimal polynomial of `ϑ` on `QSym_n`.
pub fn theta_spectrum(n: usize) -> Result<Polynomial<Rational>> {
    minimal_polynomial(&theta_matrix(n).transpose(), Bounds::global().minpoly_dim)
}

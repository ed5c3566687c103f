//! A rewriting engine for `HCl_n(0)` in the basis `c_D T_σ`, used for the
//! regular representation and to cross-check the module rules.
//!
//! Relations: `T_i c_j = c_j T_i` for `j ≠ i, i+1`, `T_i c_i = c_{i+1} T_i`
//! and `T_i c_{i+1} = c_i T_i + c_i - c_{i+1}`, the last one being
//! `(T_i + 1) c_{i+1} = c_i (T_i + 1)` solved for the left-hand side.
//! Products of `T`'s live in the 0-Hecke monoid with `T_i² = -T_i`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use super::clifford::clifford_product;
use crate::algebra::{trace_form_radical, Field, Rational, SparseVec, StructureConstants};
use crate::combinatorics::{all_permutations, peak_sets, IndexSet, Permutation};
use crate::config::Bounds;
use crate::error::{Error, Result};

/// `Σ coeff · c_D T_σ`.
pub type HclElement = BTreeMap<(IndexSet, Permutation), i64>;

fn accumulate(out: &mut HclElement, key: (IndexSet, Permutation), c: i64) {
    if c == 0 {
        return;
    }
    let e = out.entry(key.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        out.remove(&key);
    }
}

/// `T_i T_σ = T_{s_i σ}` when the length goes up, `-T_σ` otherwise.
fn t_times_perm(i: usize, sigma: &Permutation) -> (i64, Permutation) {
    let up = sigma.left_mul_simple(i);
    if up.length() > sigma.length() {
        (1, up)
    } else {
        (-1, sigma.clone())
    }
}

/// `T_ρ T_τ = ± T_{ρ ⋆ τ}` in the 0-Hecke monoid.
fn perm_product(rho: &Permutation, tau: &Permutation) -> (i64, Permutation) {
    rho.reduced_word().iter().rev().fold((1, tau.clone()), |(s, p), &i| {
        let (t, q) = t_times_perm(i, &p);
        (s * t, q)
    })
}

/// `T_i c_D` as `(coeff, D', has T_i)` triples.
fn t_past_word(i: usize, d: &IndexSet) -> Vec<(i64, IndexSet, bool)> {
    let n = d.n();
    let mut terms: Vec<(i64, IndexSet, bool)> = vec![(1, IndexSet::empty(n), true)];
    for letter in d.iter() {
        let mut next = Vec::new();
        for (c, prefix, has_t) in terms {
            let moved: Vec<(i64, usize, bool)> = if !has_t || (letter != i && letter != i + 1) {
                vec![(1, letter, has_t)]
            } else if letter == i {
                vec![(1, i + 1, true)]
            } else {
                vec![(1, i, true), (1, i, false), (-1, i + 1, false)]
            };
            for (m, x, t) in moved {
                let (s, p) = clifford_product(&prefix, &IndexSet::from_bits(n, 1 << (x - 1)));
                next.push((c * m * s as i64, p, t));
            }
        }
        terms = next;
    }
    terms
}

/// `T_i · x`.
pub fn left_mul_t(i: usize, x: &HclElement) -> HclElement {
    let mut out = HclElement::new();
    for ((d, sigma), &c) in x {
        for (m, d2, has_t) in t_past_word(i, d) {
            if has_t {
                let (s, p) = t_times_perm(i, sigma);
                accumulate(&mut out, (d2, p), c * m * s);
            } else {
                accumulate(&mut out, (d2, sigma.clone()), c * m);
            }
        }
    }
    out
}

/// `T_σ c_B` rewritten with the Clifford part on the left.
fn perm_past_word(sigma: &Permutation, b: &IndexSet) -> HclElement {
    let mut x = HclElement::from([((*b, Permutation::identity(b.n())), 1)]);
    for &i in sigma.reduced_word().iter().rev() {
        x = left_mul_t(i, &x);
    }
    x
}

/// The algebra `HCl_n(0)` with a cache of `T_σ c_B`.
pub struct HclAlgebra {
    n: usize,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    cache: HashMap<(usize, u64), HclElement>,
}

impl HclAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("HCl_n(0) needs n >= 1"));
        }
        let perms = all_permutations(n, Bounds::global().oracle_n)?;
        let perm_index = perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Ok(HclAlgebra { n, perms, perm_index, cache: HashMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^n n!`.
    pub fn dim(&self) -> usize {
        self.perms.len() << self.n
    }

    /// Basis element number `k` is `c_D T_σ` with `D` from the high part.
    pub fn basis_element(&self, k: usize) -> (IndexSet, Permutation) {
        let m = self.perms.len();
        (IndexSet::from_bits(self.n, (k / m) as u64), self.perms[k % m].clone())
    }

    pub fn index_of(&self, d: &IndexSet, sigma: &Permutation) -> usize {
        d.bits() as usize * self.perms.len() + self.perm_index[sigma]
    }

    /// `(c_A T_σ)(c_B T_τ)`.
    pub fn multiply_basis(&mut self, a: &(IndexSet, Permutation), b: &(IndexSet, Permutation)) -> HclElement {
        let key = (self.perm_index[&a.1], b.0.bits());
        let middle = self.cache.entry(key).or_insert_with(|| perm_past_word(&a.1, &b.0)).clone();
        let mut out = HclElement::new();
        for ((c, rho), coeff) in middle {
            let (s1, d) = clifford_product(&a.0, &c);
            let (s2, p) = perm_product(&rho, &b.1);
            accumulate(&mut out, (d, p), coeff * s1 as i64 * s2);
        }
        out
    }

    pub fn multiply(&mut self, x: &HclElement, y: &HclElement) -> HclElement {
        let mut out = HclElement::new();
        for (a, ca) in x {
            for (b, cb) in y {
                for (k, c) in self.multiply_basis(a, b) {
                    accumulate(&mut out, k, ca * cb * c);
                }
            }
        }
        out
    }

    /// Structure constants of the regular representation.
    pub fn structure_constants(&mut self) -> StructureConstants<Rational> {
        let dim = self.dim();
        let basis: Vec<_> = (0..dim).map(|k| self.basis_element(k)).collect();
        StructureConstants::build(dim, |i, j| {
            let prod = self.multiply_basis(&basis[i], &basis[j]);
            SparseVec::from_pairs(prod.iter().map(|((d, p), &c)| (self.index_of(d, p), Rational::from_i64(c))))
        })
    }
}

/// `T_k c_D ε_I` computed by the engine: rewrite `T_k c_D` as `Σ c_{D'} T_ρ`
/// and let `T_ρ` act on `ε_I` by `T_i ε_I = -ε_I` for `i ∈ Des(I)` and
/// `0` otherwise.
pub fn engine_module_action(k: usize, des: &IndexSet, d: &IndexSet) -> BTreeMap<IndexSet, i64> {
    let x = left_mul_t(k, &HclElement::from([((*d, Permutation::identity(d.n())), 1)]));
    let mut out = BTreeMap::new();
    for ((d2, rho), c) in x {
        let word = rho.reduced_word();
        if word.iter().all(|&i| des.contains(i)) {
            let sign = if word.len() % 2 == 0 { 1 } else { -1 };
            *out.entry(d2).or_insert(0) += c * sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Dimension of the superradical: the closed form, and the trace-form
/// radical of the regular representation when `n` is small enough.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub n: usize,
    pub formula: BigUint,
    pub computed: Option<usize>,
}

/// `2^n n! - Σ_P 2^{2n-(|P|+1)}`.
pub fn radical_formula(n: usize) -> BigUint {
    let total = (1..=n).fold(BigUint::from(1u32) << n, |acc, k| acc * BigUint::from(k));
    let simple: BigUint = peak_sets(n).iter().map(|p| BigUint::from(1u32) << (2 * n - p.len() - 1)).sum();
    total - simple
}

/// Largest `n` for which the regular representation is assembled.
pub const RADICAL_COMPUTE_N: usize = 4;

pub fn radical_dimension_report(n: usize) -> Result<RadicalReport> {
    if n == 0 {
        return Err(Error::invalid("radical report needs n >= 1"));
    }
    Error::check_bound("radical report n", n, Bounds::global().decomp_n.max(RADICAL_COMPUTE_N))?;
    let computed = if n <= RADICAL_COMPUTE_N {
        let mut alg = HclAlgebra::new(n)?;
        let table = alg.structure_constants();
        Some(trace_form_radical(&table, Bounds::global().radical_dim)?)
    } else {
        None
    };
    Ok(RadicalReport { n, formula: radical_formula(n), computed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke_clifford::module::t_action;

    fn single(d: IndexSet, p: Permutation) -> HclElement {
        HclElement::from([((d, p), 1)])
    }

    #[test]
    fn generator_relations() {
        let mut alg = HclAlgebra::new(3).unwrap();
        let id = Permutation::identity(3);
        let e = IndexSet::empty(3);
        let t = |i: usize| single(e, id.left_mul_simple(i));
        let c = |j: usize| single(IndexSet::from_bits(3, 1 << (j - 1)), id.clone());
        let one = single(e, id.clone());
        let neg = |x: &HclElement| x.iter().map(|(k, v)| (k.clone(), -v)).collect::<HclElement>();
        let add = |x: &HclElement, y: &HclElement| {
            let mut out = x.clone();
            for (k, v) in y {
                accumulate(&mut out, k.clone(), *v);
            }
            out
        };
        assert_eq!(alg.multiply(&t(1), &t(1)), neg(&t(1)));
        assert_eq!(alg.multiply(&c(2), &c(2)), neg(&one));
        let t12 = alg.multiply(&t(1), &t(2));
        let lhs = alg.multiply(&t12, &t(1));
        let t21 = alg.multiply(&t(2), &t(1));
        let rhs = alg.multiply(&t21, &t(2));
        assert_eq!(lhs, rhs);
        assert_eq!(alg.multiply(&t(1), &c(1)), alg.multiply(&c(2), &t(1)));
        let t1p = add(&t(1), &one);
        assert_eq!(alg.multiply(&t1p, &c(2)), alg.multiply(&c(1), &t1p));
        assert_eq!(alg.multiply(&t(1), &c(3)), alg.multiply(&c(3), &t(1)));
    }

    #[test]
    fn associativity_on_basis_triples() {
        let mut alg = HclAlgebra::new(3).unwrap();
        let dim = alg.dim();
        for (i, j, k) in [(5, 17, 40), (47, 3, 22), (30, 31, 32), (13, 44, 9)] {
            let (a, b, c) = (alg.basis_element(i % dim), alg.basis_element(j % dim), alg.basis_element(k % dim));
            let (a, b, c) = (single(a.0, a.1), single(b.0, b.1), single(c.0, c.1));
            let ab = alg.multiply(&a, &b);
            let left = alg.multiply(&ab, &c);
            let bc = alg.multiply(&b, &c);
            let right = alg.multiply(&a, &bc);
            assert_eq!(left, right);
        }
    }

    #[test]
    fn engine_agrees_with_module_rules_small() {
        for bits in 0..4u64 {
            for des_bits in 0..2u64 {
                let (d, des) = (IndexSet::from_bits(2, bits), IndexSet::from_bits(2, des_bits));
                let expected: BTreeMap<IndexSet, i64> = t_action(1, &des, &d).into_iter().map(|(c, e)| (e, c)).collect();
                assert_eq!(engine_module_action(1, &des, &d), expected);
            }
        }
    }

    #[test]
    fn radical_formula_values() {
        assert_eq!(radical_formula(2), BigUint::from(0u32));
        assert_eq!(radical_formula(3), BigUint::from(0u32));
        assert_eq!(radical_formula(4), BigUint::from(128u32));
    }

    #[test]
    fn small_radicals() {
        assert_eq!(radical_dimension_report(2).unwrap().computed, Some(0));
        assert_eq!(radical_dimension_report(3).unwrap().computed, Some(0));
        assert_eq!(radical_dimension_report(6).unwrap().computed, None);
    }
}

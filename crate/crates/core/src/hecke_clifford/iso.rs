//! Explicit isomorphisms `M_I ≅ M_J` for compositions with the same peak set.

use std::collections::{HashMap, VecDeque};

use super::clifford::{clifford_multiply, clifford_word, CliffordElement};
use super::module::{build_module, intertwines, HclModule, Operator};
use crate::algebra::{Field, GaussianRational, SparseVec};
use crate::combinatorics::{Composition, IndexSet};
use crate::error::{Error, Result};

/// The module map `c_D ε ↦ c_D η`, for `η = x ε'` given by its Clifford
/// part `x`.
pub fn map_from_image(n: usize, x: &CliffordElement) -> Operator {
    let cols = (0..1u64 << n)
        .map(|bits| {
            let image = clifford_multiply(&clifford_word(IndexSet::from_bits(n, bits)), x);
            SparseVec::from_pairs(image.iter().map(|(d, c)| (d.bits() as usize, c.clone())))
        })
        .collect();
    Operator::from_columns(cols)
}

/// `c_k c_{k+1} + sign`.
fn pair_plus(n: usize, k: usize, sign: i64) -> CliffordElement {
    let mut x = clifford_word(IndexSet::new(n, [k, k + 1]).unwrap());
    x.add_term(IndexSet::empty(n), GaussianRational::from_i64(sign));
    x
}

/// Compositions reachable from `i` by toggling one descent without changing
/// the peak set.
fn peak_neighbours(i: &Composition) -> Vec<(usize, Composition)> {
    let n = i.size();
    let des = i.descents();
    let peaks = i.peak_set();
    (1..n)
        .filter_map(|k| {
            let j = Composition::from_descents(&des.toggled(k), n).unwrap();
            (j.peak_set() == peaks).then_some((k, j))
        })
        .collect()
}

/// An isomorphism `M_from → M_to` when `Des(from)` and `Des(to)` differ by
/// the single element `k`: one of `ε_big ↦ (c_k c_{k+1} - 1) ε_small` or
/// `ε_small ↦ (c_k c_{k+1} + 1) ε_big` intertwines, inverted if needed.
fn single_step(from: &HclModule, to: &HclModule, k: usize) -> Result<Operator> {
    let n = from.n();
    let from_is_big = from.composition().descents().contains(k);
    let (big, small) = if from_is_big { (from, to) } else { (to, from) };
    let candidates = [(big, small, pair_plus(n, k, -1)), (small, big, pair_plus(n, k, 1))];
    for (src, dst, eta) in candidates {
        let f = map_from_image(n, &eta);
        if !intertwines(&f, src, dst) {
            continue;
        }
        let forward = std::ptr::eq(src, from);
        let f = if forward { Some(f) } else { f.inverse() };
        if let Some(f) = f {
            if f.is_invertible() {
                return Ok(f);
            }
        }
    }
    Err(Error::internal(format!(
        "no single-step isomorphism between M_{} and M_{} at k = {k}",
        from.composition(),
        to.composition()
    )))
}

/// An explicit isomorphism `M_I → M_J`, composed along a chain of single
/// descent toggles inside the peak class. `Ok(None)` when the peak sets
/// differ; an error when the sizes differ.
pub fn build_iso(i: &Composition, j: &Composition) -> Result<Option<Operator>> {
    if i.size() != j.size() {
        return Err(Error::invalid(format!("{i} and {j} have different sizes")));
    }
    if i.peak_set() != j.peak_set() {
        return Ok(None);
    }
    let n = i.size();
    // breadth-first search for a toggle chain from i to j
    let mut prev: HashMap<Composition, (Composition, usize)> = HashMap::new();
    let mut queue = VecDeque::from([i.clone()]);
    let mut seen = std::collections::HashSet::from([i.clone()]);
    while let Some(cur) = queue.pop_front() {
        if cur == *j {
            break;
        }
        for (k, next) in peak_neighbours(&cur) {
            if seen.insert(next.clone()) {
                prev.insert(next.clone(), (cur.clone(), k));
                queue.push_back(next);
            }
        }
    }
    let mut chain = vec![];
    let mut cur = j.clone();
    while cur != *i {
        let (p, k) = prev
            .get(&cur)
            .cloned()
            .ok_or_else(|| Error::internal(format!("peak class of {i} is not connected by toggles")))?;
        chain.push((p.clone(), k, cur.clone()));
        cur = p;
    }
    chain.reverse();
    let mut total = Operator::identity(1 << n);
    for (a, k, b) in chain {
        let step = single_step(&build_module(&a)?, &build_module(&b)?, k)?;
        total = step.compose(&total);
    }
    Ok(Some(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn horizontal_pair_example() {
        let (i, j) = (c("1,1"), c("2"));
        let f = map_from_image(2, &pair_plus(2, 1, 1));
        let (mi, mj) = (build_module(&i).unwrap(), build_module(&j).unwrap());
        assert!(intertwines(&f, &mj, &mi));
        assert!(f.is_invertible());
        let g = build_iso(&i, &j).unwrap().unwrap();
        assert!(intertwines(&g, &mi, &mj));
    }

    #[test]
    fn identity_and_failure() {
        let f = build_iso(&c("2,1"), &c("2,1")).unwrap().unwrap();
        assert!(f.is_identity());
        assert!(build_iso(&c("3"), &c("2,1")).unwrap().is_none());
        assert!(build_iso(&c("3"), &c("2")).is_err());
    }

    #[test]
    fn both_pair_constructions_are_isomorphisms() {
        for n in 2..=5 {
            for i in crate::combinatorics::compositions(n) {
                for (k, j) in peak_neighbours(&i) {
                    if !i.descents().contains(k) {
                        continue;
                    }
                    let (big, small) = (build_module(&i).unwrap(), build_module(&j).unwrap());
                    let down = map_from_image(n, &pair_plus(n, k, -1));
                    let up = map_from_image(n, &pair_plus(n, k, 1));
                    assert!(intertwines(&down, &big, &small) && down.is_invertible(), "{i} -> {j}");
                    assert!(intertwines(&up, &small, &big) && up.is_invertible(), "{j} -> {i}");
                }
            }
        }
    }
}

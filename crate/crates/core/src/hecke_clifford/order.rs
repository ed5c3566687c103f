//! The partial order `≤_I` on subsets `D ⊆ [1, n]` generated by the cover
//! arrows of the two-box rules.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::module::{alpha, HclModule};
use crate::algebra::{Field, GaussianRational};
use crate::combinatorics::{Composition, IndexSet};
use crate::error::{Error, Result};

/// Cover arrows `D → D'` (`D'` is smaller): for `k ∉ Des(I)`,
/// `{…, k+1} → {…, k}` and `{…, k, k+1} → {…}`; for `k ∈ Des(I)`,
/// `{…, k} → {…, k+1}` and `{…, k, k+1} → {…}`.
pub fn cover_relations(i: &Composition) -> Vec<(IndexSet, IndexSet)> {
    let n = i.size();
    let des = i.descents();
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let d = IndexSet::from_bits(n, bits);
        for k in 1..n {
            let (has_k, has_k1) = (d.contains(k), d.contains(k + 1));
            let target = match (des.contains(k), has_k, has_k1) {
                (_, true, true) => Some(d.without(k).without(k + 1)),
                (false, false, true) => Some(d.without(k + 1).with(k)),
                (true, true, false) => Some(d.without(k).with(k + 1)),
                _ => None,
            };
            if let Some(e) = target {
                out.push((d, e));
            }
        }
    }
    out
}

/// Transitive closure of the cover arrows.
#[derive(Clone, Debug)]
pub struct LeqOrder {
    n: usize,
    arrows: Vec<(IndexSet, IndexSet)>,
    /// `below[D]` has bit `E` set when `E < D`.
    below: Vec<Vec<u64>>,
}

impl LeqOrder {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(IndexSet, IndexSet)] {
        &self.arrows
    }

    /// `e < d` strictly.
    pub fn less(&self, e: &IndexSet, d: &IndexSet) -> bool {
        let idx = e.bits() as usize;
        self.below[d.bits() as usize][idx / 64] >> (idx % 64) & 1 == 1
    }

    fn size(&self) -> usize {
        1 << self.n
    }

    /// Minimal elements first; ties broken by the raw bits.
    pub fn linear_extension(&self) -> Result<Vec<IndexSet>> {
        let size = self.size();
        let mut out_degree = vec![0usize; size];
        let mut sources: Vec<Vec<usize>> = vec![Vec::new(); size];
        for (d, e) in &self.arrows {
            out_degree[d.bits() as usize] += 1;
            sources[e.bits() as usize].push(d.bits() as usize);
        }
        let mut ready: BTreeSet<usize> = (0..size).filter(|&v| out_degree[v] == 0).collect();
        let mut order = Vec::with_capacity(size);
        while let Some(v) = ready.pop_first() {
            order.push(IndexSet::from_bits(self.n, v as u64));
            for &s in &sources[v] {
                out_degree[s] -= 1;
                if out_degree[s] == 0 {
                    ready.insert(s);
                }
            }
        }
        if order.len() != size {
            return Err(Error::internal("the cover arrows contain a cycle"));
        }
        Ok(order)
    }

    /// Number of connected components of the (undirected) Hasse diagram.
    pub fn component_count(&self) -> usize {
        let size = self.size();
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (d, e) in &self.arrows {
            let (a, b) = (find(&mut parent, d.bits() as usize), find(&mut parent, e.bits() as usize));
            parent[a] = b;
        }
        (0..size).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Pairs `(D, E)` with `E < D` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(IndexSet, IndexSet)> {
        let size = self.size();
        let mut out = Vec::new();
        for d in 0..size {
            let dset = IndexSet::from_bits(self.n, d as u64);
            for e in 0..size {
                let eset = IndexSet::from_bits(self.n, e as u64);
                if !self.less(&eset, &dset) {
                    continue;
                }
                let between = (0..size).any(|f| {
                    let fset = IndexSet::from_bits(self.n, f as u64);
                    self.less(&eset, &fset) && self.less(&fset, &dset)
                });
                if !between {
                    out.push((dset, eset));
                }
            }
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram, nodes labelled by `D`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{name}\" {{").unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        for bits in 0..self.size() as u64 {
            let d = IndexSet::from_bits(self.n, bits);
            writeln!(s, "  d{bits} [label=\"{d}\"];").unwrap();
        }
        for (d, e) in self.hasse_edges() {
            writeln!(s, "  d{} -> d{};", e.bits(), d.bits()).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// The order `≤_I`.
pub fn leq_order(i: &Composition) -> LeqOrder {
    let n = i.size();
    let size = 1usize << n;
    let words = size.div_ceil(64);
    let arrows = cover_relations(i);
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (d, e) in &arrows {
        succ[d.bits() as usize].push(e.bits() as usize);
    }
    let mut below = vec![vec![0u64; words]; size];
    for start in 0..size {
        let mut stack = succ[start].clone();
        while let Some(v) = stack.pop() {
            if below[start][v / 64] >> (v % 64) & 1 == 1 {
                continue;
            }
            below[start][v / 64] |= 1 << (v % 64);
            stack.extend_from_slice(&succ[v]);
        }
    }
    LeqOrder { n, arrows, below }
}

/// Checks that every `T_k` acts triangularly along `≤_I`: the off-diagonal
/// terms of `T_k c_D ε_I` are strictly below `D`, and the diagonal entry is
/// `α(k, I, D)`. Also checks that parity is preserved by every arrow.
pub fn check_triangularity(m: &HclModule) -> Result<()> {
    let i = m.composition();
    let order = leq_order(i);
    if order.arrows().iter().any(|(d, e)| d.len() % 2 != e.len() % 2) {
        return Err(Error::internal(format!("an arrow of ≤_{i} changes parity")));
    }
    let extension = order.linear_extension()?;
    let mut position = vec![0usize; m.dim()];
    for (pos, d) in extension.iter().enumerate() {
        position[d.bits() as usize] = pos;
    }
    for k in 1..m.n() {
        for d in m.basis().map(|v| v.d) {
            for (row, value) in m.t(k).column(d.bits() as usize).iter() {
                let e = IndexSet::from_bits(m.n(), row as u64);
                if e == d {
                    if *value != GaussianRational::from_i64(alpha(k, i, &d)) {
                        return Err(Error::internal(format!("T_{k} has diagonal {value} at {d} on M_{i}")));
                    }
                } else if !order.less(&e, &d) || position[row] >= position[d.bits() as usize] {
                    return Err(Error::internal(format!("T_{k} c_{d} has a term at {e}, not below {d} in ≤_{i}")));
                }
            }
            if m.t(k).column(d.bits() as usize).get(d.bits() as usize).is_zero() && alpha(k, i, &d) != 0 {
                return Err(Error::internal(format!("T_{k} misses its diagonal at {d} on M_{i}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke_clifford::build_module;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn cover_examples() {
        let horizontal = cover_relations(&c("2"));
        assert_eq!(horizontal, vec![(set(2, &[2]), set(2, &[1])), (set(2, &[1, 2]), set(2, &[]))]);
        let vertical = cover_relations(&c("1,1"));
        assert_eq!(vertical, vec![(set(2, &[1]), set(2, &[2])), (set(2, &[1, 2]), set(2, &[]))]);
    }

    #[test]
    fn two_components_for_211() {
        assert_eq!(leq_order(&c("2,1,1")).component_count(), 2);
    }

    #[test]
    fn triangular_action() {
        for i in ["2", "1,1", "2,1,1", "1,3,1", "2,2"] {
            check_triangularity(&build_module(&c(i)).unwrap()).unwrap();
        }
    }

    #[test]
    fn dot_output_has_every_node() {
        let dot = leq_order(&c("2,1")).to_dot("M_21");
        assert_eq!(dot.matches("label=").count(), 8);
        assert!(dot.starts_with("digraph"));
    }
}

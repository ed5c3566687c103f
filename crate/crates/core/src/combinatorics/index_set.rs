use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient size an [`IndexSet`] can carry.
pub const MAX_INDEX_N: usize = 63;

/// A subset of `{1, …, n}` that remembers its ambient `n`.
///
/// Element `k` is stored as bit `k - 1`, so for Clifford subsets of `[1, n]`
/// the raw bits double as the index of the basis vector `c_D ε`.
/// Two sets with different `n` are different values even when both are
/// empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    n: usize,
    bits: u64,
}

impl IndexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_INDEX_N, "ambient size {n} too large");
        IndexSet { n, bits: 0 }
    }

    /// A subset of `[1, n]`.
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n > MAX_INDEX_N {
            return Err(Error::invalid(format!("ambient size {n} exceeds {MAX_INDEX_N}")));
        }
        let mut bits = 0u64;
        for e in elems {
            if e == 0 || e > n {
                return Err(Error::invalid(format!("element {e} outside [1, {n}]")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(IndexSet { n, bits })
    }

    /// A subset of `[1, n-1]`, the range of descent sets.
    pub fn descent_set(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = Self::new(n, elems)?;
        if set.contains(n) {
            return Err(Error::invalid(format!("descent set element {n} outside [1, {}]", n.saturating_sub(1))));
        }
        Ok(set)
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= MAX_INDEX_N, "ambient size {n} too large");
        assert!(n == 64 || bits >> n == 0, "bits outside [1, {n}]");
        IndexSet { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && k <= self.n && self.bits & (1 << (k - 1)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.n).filter(move |k| bits & (1 << (k - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn with(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.n);
        IndexSet { n: self.n, bits: self.bits | 1 << (k - 1) }
    }

    pub fn without(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.n);
        IndexSet { n: self.n, bits: self.bits & !(1 << (k - 1)) }
    }

    pub fn toggled(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.n);
        IndexSet { n: self.n, bits: self.bits ^ 1 << (k - 1) }
    }

    /// `A + 1`; elements pushed past `n` are dropped.
    pub fn shift_up(&self) -> Self {
        let mask = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        IndexSet { n: self.n, bits: (self.bits << 1) & mask }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits ^ other.bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits & other.bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        IndexSet { n: self.n, bits: self.bits | other.bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Restriction to `[lo, hi]`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        IndexSet { n: self.n, bits: self.iter().filter(|&k| k >= lo && k <= hi).fold(0, |b, k| b | 1 << (k - 1)) }
    }

    /// Every subset of `self`, in increasing order of the raw bits.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSet> + '_ {
        let full = self.bits;
        let n = self.n;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(IndexSet { n, bits: cur })
        })
    }

    /// Every subset of `[lo, hi] ∩ [1, n]`.
    pub fn all_subsets_of_range(n: usize, lo: usize, hi: usize) -> Vec<IndexSet> {
        let range = IndexSet::new(n, (lo.max(1)..=hi.min(n)).collect::<Vec<_>>()).expect("range within [1, n]");
        range.subsets().collect()
    }

    /// True when no two elements are consecutive integers.
    pub fn is_sparse(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }
}

/// Ordered by ambient size, then cardinality, then lexicographically on the
/// sorted elements.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊆[{}]", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = IndexSet::new(5, [1, 3, 4]).unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(&s)));
        assert_eq!(IndexSet::empty(3).subsets().count(), 1);
    }

    #[test]
    fn shift_and_symmetric_difference() {
        let d = IndexSet::new(4, [2, 3]).unwrap();
        assert_eq!(d.shift_up().to_vec(), vec![3, 4]);
        assert_eq!(d.symmetric_difference(&d.shift_up()).to_vec(), vec![2, 4]);
    }

    #[test]
    fn empty_sets_with_different_n_differ() {
        assert_ne!(IndexSet::empty(3), IndexSet::empty(4));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(IndexSet::new(3, [4]).is_err());
        assert!(IndexSet::new(3, [0]).is_err());
        assert!(IndexSet::descent_set(3, [3]).is_err());
    }
}

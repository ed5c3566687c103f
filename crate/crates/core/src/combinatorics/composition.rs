use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::index_set::IndexSet;
use crate::error::{Error, Result};

/// An ordered list of positive integers; `n` is their sum.
///
/// The derived ordering is lexicographic on the parts, which is the canonical
/// order used by [`compositions`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, …, 1)`.
    pub fn column(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `I ▷ J`: concatenation with the last part of `I` fused to the first
    /// part of `J`. Equals plain concatenation if either side is empty.
    pub fn fuse(&self, other: &Self) -> Self {
        if self.is_empty() || other.is_empty() {
            return self.concat(other);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// Descent set `{i₁, i₁+i₂, …, i₁+…+i_{r-1}}`.
    pub fn descents(&self) -> IndexSet {
        let n = self.size();
        let mut acc = 0;
        let sums: Vec<usize> = self.0[..self.0.len().saturating_sub(1)]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect();
        IndexSet::new(n, sums).expect("partial sums lie in [1, n-1]")
    }

    /// Inverse of [`Composition::descents`].
    pub fn from_descents(set: &IndexSet, n: usize) -> Result<Self> {
        if set.n() != n {
            return Err(Error::invalid(format!("descent set carries n = {}, expected {n}", set.n())));
        }
        if set.contains(n) {
            return Err(Error::invalid(format!("descent {n} outside [1, {}]", n.saturating_sub(1))));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for d in set.iter() {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    /// `HP(I) = {a ∈ Des(I) : a ≠ 1, a-1 ∉ Des(I)}`.
    pub fn peak_set(&self) -> IndexSet {
        let des = self.descents();
        let n = self.size();
        IndexSet::new(n, des.iter().filter(|&a| a != 1 && !des.contains(a - 1)).collect::<Vec<_>>())
            .expect("peaks are descents")
    }

    /// Boxes `k` that are not descents and start a row of the ribbon diagram:
    /// `k ∉ Des(I)` and (`k = 1` or `k - 1 ∈ Des(I)`).
    pub fn valleys(&self) -> IndexSet {
        let des = self.descents();
        let n = self.size();
        IndexSet::new(n, (1..=n).filter(|&k| !des.contains(k) && (k == 1 || des.contains(k - 1))).collect::<Vec<_>>())
            .expect("valleys lie in [1, n]")
    }

    /// True when every part before the last is at least 2, i.e. `I` is the
    /// minimal composition of its peak class.
    pub fn is_peak_composition(&self) -> bool {
        let r = self.0.len();
        r == 0 || self.0[..r - 1].iter().all(|&p| p >= 2)
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    /// Compositions `J` of the same size with `Des(J) ⊆ Des(self)`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        self.descents()
            .subsets()
            .map(|s| Composition::from_descents(&s, n).unwrap())
            .collect()
    }

    /// Compositions `J` of the same size with `Des(J) ⊇ Des(self)`.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        let des = self.descents();
        let free = IndexSet::new(n, (1..n).filter(|&k| !des.contains(k)).collect::<Vec<_>>()).unwrap();
        free.subsets()
            .map(|s| Composition::from_descents(&s.union(&des), n).unwrap())
            .collect()
    }

    /// Parts concatenated, e.g. `"2221"`, as used for matrix labels.
    pub fn label(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated parts such as `2,1,3`; brackets are tolerated and
/// the empty string is the empty composition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if trimmed.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("cannot parse composition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All `2^(n-1)` compositions of `n` (the single empty composition for
/// `n = 0`), in lexicographic order of parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = IndexSet::all_subsets_of_range(n, 1, n - 1)
        .iter()
        .map(|s| Composition::from_descents(s, n).unwrap())
        .collect();
    out.sort();
    out
}

/// Compositions of `n` with every part odd.
pub fn odd_compositions(n: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.is_odd()).collect()
}

/// Fibonacci numbers with `f₀ = f₁ = f₂ = 1` and `f_{n} = f_{n-1} + f_{n-2}`
/// for `n ≥ 3`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 2..n {
        let c = a + b;
        a = b;
        b = c;
    }
    b
}

/// All peak sets of `n`: subsets of `[2, n-1]` without consecutive elements,
/// ordered by cardinality then lexicographically.
pub fn peak_sets(n: usize) -> Vec<IndexSet> {
    if n < 3 {
        return vec![IndexSet::empty(n)];
    }
    let mut out: Vec<IndexSet> = IndexSet::all_subsets_of_range(n, 2, n - 1)
        .into_iter()
        .filter(|s| s.is_sparse())
        .collect();
    out.sort();
    out
}

/// Checks that `p` is a peak set of `n`.
pub fn validate_peak_set(p: &IndexSet, n: usize) -> Result<()> {
    if p.n() != n {
        return Err(Error::invalid(format!("peak set {p} carries n = {}, expected {n}", p.n())));
    }
    if p.contains(1) || p.contains(n) {
        return Err(Error::invalid(format!("peak set {p} must lie in [2, {}]", n.saturating_sub(1))));
    }
    if !p.is_sparse() {
        return Err(Error::invalid(format!("peak set {p} contains consecutive elements")));
    }
    Ok(())
}

/// The unique composition with descent set `P`; it is the minimal element
/// of the peak class of `P` (parts ≥ 2 except possibly the last).
pub fn peak_composition(p: &IndexSet, n: usize) -> Result<Composition> {
    validate_peak_set(p, n)?;
    Composition::from_descents(p, n)
}

/// Peak compositions of `n` in decreasing lexicographic order, the column
/// order of the printed decomposition matrices.
pub fn peak_compositions(n: usize) -> Vec<Composition> {
    let mut out: Vec<Composition> = peak_sets(n).iter().map(|p| peak_composition(p, n).unwrap()).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

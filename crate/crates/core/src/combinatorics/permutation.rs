use std::fmt;

use super::index_set::IndexSet;
use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!("{one_line:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for `i ∈ [1, n]`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    /// `{i : σ(i) > σ(i+1)}`.
    pub fn descents(&self) -> IndexSet {
        let n = self.n();
        IndexSet::new(n, (1..n).filter(|&i| self.0[i - 1] > self.0[i]).collect::<Vec<_>>()).unwrap()
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `s_i ∘ self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        )
    }

    /// `self ∘ s_i`: swaps the positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// A reduced word `(i₁, …, i_p)` with `self = s_{i₁} ∘ … ∘ s_{i_p}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // bubble sort from the right: peel off right descents
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = (1..cur.n()).find(|&i| cur.0[i - 1] > cur.0[i]) {
            word.push(i);
            cur = cur.right_mul_simple(i);
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All permutations of `n` letters in lexicographic order of one-line
/// notation. Refuses `n` above `bound`.
pub fn all_permutations(n: usize, bound: usize) -> Result<Vec<Permutation>> {
    Error::check_bound("permutation size n", n, bound)?;
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![Permutation(cur.clone())];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation(cur.clone()));
    }
    Ok(out)
}

/// Every `σ ∈ 𝔖_n` whose descent set is exactly `set`.
pub fn permutations_with_descents(set: &IndexSet, n: usize, bound: usize) -> Result<Vec<Permutation>> {
    if set.n() != n || set.contains(n) {
        return Err(Error::invalid(format!("{set:?} is not a subset of [1, {}]", n.saturating_sub(1))));
    }
    Ok(all_permutations(n, bound)?.into_iter().filter(|p| p.descents() == *set).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u8]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn descent_class_examples() {
        let none = permutations_with_descents(&IndexSet::empty(3), 3, 8).unwrap();
        assert_eq!(none, vec![Permutation::identity(3)]);
        let all = permutations_with_descents(&IndexSet::new(3, [1, 2]).unwrap(), 3, 8).unwrap();
        assert_eq!(all, vec![p(&[3, 2, 1])]);
        let one = permutations_with_descents(&IndexSet::new(3, [1]).unwrap(), 3, 8).unwrap();
        assert_eq!(one, vec![p(&[2, 1, 3]), p(&[3, 1, 2])]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(all_permutations(9, 8), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn reduced_words_rebuild_the_permutation() {
        for sigma in all_permutations(4, 8).unwrap() {
            let word = sigma.reduced_word();
            assert_eq!(word.len(), sigma.length());
            let rebuilt = word
                .iter()
                .fold(Permutation::identity(4), |acc, &i| acc.right_mul_simple(i));
            assert_eq!(rebuilt, sigma);
        }
    }

    #[test]
    fn inverse_and_compose() {
        let s = p(&[2, 3, 1]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.compose(&p(&[2, 1, 3])), p(&[3, 2, 1]));
    }
}

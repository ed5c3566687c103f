//! Standard shifted tableaux and their peak sets.

use std::fmt;

use crate::combinatorics::{IndexSet, StrictPartition};
use crate::error::{Error, Result};

/// A standard filling of the shifted diagram of a strict partition: row `i`
/// (0-based) starts in column `i`, entries are `1..=n`, increasing along
/// rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<usize>>,
}

impl ShiftedTableau {
    pub fn new(shape: StrictPartition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.size();
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths != shape.parts() {
            return Err(Error::invalid(format!("row lengths {lengths:?} do not match shape {shape}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::invalid("entries must be a permutation of 1..=n"));
            }
        }
        let t = ShiftedTableau { shape, rows };
        for (i, row) in t.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!("row {} is not increasing", i + 1)));
            }
            if i > 0 {
                for (k, &x) in row.iter().enumerate() {
                    // cell (i, i + k) sits below (i - 1, i + k), which is entry k + 1 of the previous row
                    if t.rows[i - 1].get(k + 1).map_or(true, |&above| above >= x) {
                        return Err(Error::invalid(format!("column through {x} is not increasing")));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Row (0-based) of every entry, indexed by the entry.
    fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                out[x] = i;
            }
        }
        out
    }

    /// `{i : i + 1 lies in a row strictly below i}`.
    pub fn descent_set(&self) -> IndexSet {
        let n = self.size();
        let row = self.row_of();
        IndexSet::new(n, (1..n).filter(|&i| row[i + 1] > row[i]).collect::<Vec<_>>()).expect("descents lie in [1, n-1]")
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}{}", "   ".repeat(i), cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Every standard shifted tableau of shape `lambda`, built by placing
/// `1, 2, …` in addable corners.
pub fn shifted_tableaux(lambda: &StrictPartition) -> Vec<ShiftedTableau> {
    fn fill(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            // the new cell (i, i + len) needs the cell above, (i - 1, i + len), filled
            let ok = len < shape[i] && (i == 0 || rows[i - 1].len() >= len + 2);
            if ok {
                rows[i].push(next);
                fill(shape, rows, next + 1, n, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    fill(lambda.parts(), &mut rows, 1, lambda.size(), &mut out);
    out.into_iter()
        .map(|rows| ShiftedTableau { shape: lambda.clone(), rows })
        .collect()
}

/// `Λ(T)`: the peaks of the descent set, `{i ∈ [2, n-1] : i ∈ D(T), i - 1 ∉ D(T)}`.
pub fn tableau_peaks(t: &ShiftedTableau) -> IndexSet {
    let d = t.descent_set();
    let n = t.size();
    IndexSet::new(n, d.iter().filter(|&i| i >= 2 && i < n && !d.contains(i - 1)).collect::<Vec<_>>())
        .expect("peaks lie in [2, n-1]")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    /// Standard shifted tableaux counted by the shifted hook formula
    /// `g^λ = n! / ∏ λ_i! · ∏_{i<j} (λ_i - λ_j)/(λ_i + λ_j)`.
    fn shifted_hook_count(lambda: &StrictPartition) -> u64 {
        let p = lambda.parts();
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let mut num = fact(lambda.size()) as u128;
        let mut den = 1u128;
        for &x in p {
            den *= fact(x) as u128;
        }
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                num *= (p[i] - p[j]) as u128;
                den *= (p[i] + p[j]) as u128;
            }
        }
        assert_eq!(num % den, 0);
        (num / den) as u64
    }

    #[test]
    fn single_tableau_of_shape_21() {
        let ts = shifted_tableaux(&sp("2,1"));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(tableau_peaks(&ts[0]), IndexSet::new(3, [2]).unwrap());
    }

    #[test]
    fn counts_match_hook_formula() {
        for n in 1..=9 {
            for lambda in crate::combinatorics::strict_partitions(n) {
                let ts = shifted_tableaux(&lambda);
                assert_eq!(ts.len() as u64, shifted_hook_count(&lambda), "{lambda}");
                for t in &ts {
                    assert!(ShiftedTableau::new(lambda.clone(), t.rows().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn invalid_fillings_are_rejected() {
        assert!(ShiftedTableau::new(sp("2,1"), vec![vec![1, 3], vec![2]]).is_err());
        assert!(ShiftedTableau::new(sp("2,1"), vec![vec![2, 1], vec![3]]).is_err());
        assert!(ShiftedTableau::new(sp("2,1"), vec![vec![1, 2]]).is_err());
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition into distinct parts, stored in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not a strictly decreasing list of positive parts")));
        }
        Ok(StrictPartition(parts))
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

    pub fn label(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        let parts = trimmed
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::invalid(format!("cannot parse part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        StrictPartition::new(parts)
    }
}

/// All partitions of `n` into distinct parts, in decreasing lexicographic
/// order (the row order of the printed decomposition matrices).
pub fn strict_partitions(n: usize) -> Vec<StrictPartition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if remaining == 0 {
            out.push(StrictPartition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into odd parts (repetition allowed), decreasing parts.
pub fn odd_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut p = remaining.min(max_part);
        if p % 2 == 0 {
            p = p.saturating_sub(1);
        }
        while p >= 1 {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        strict_partitions(n).iter().map(|p| p.label()).collect()
    }

    #[test]
    fn strict_partition_examples() {
        assert_eq!(labels(5), vec!["5", "41", "32"]);
        assert_eq!(labels(9), vec!["9", "81", "72", "63", "621", "54", "531", "432"]);
        assert_eq!(labels(1), vec!["1"]);
    }

    #[test]
    fn odd_partition_examples() {
        assert_eq!(odd_partitions(3), vec![vec![3], vec![1, 1, 1]]);
        assert_eq!(odd_partitions(6).len(), 4);
    }

    #[test]
    fn rejects_non_strict() {
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(StrictPartition::new(vec![1, 2]).is_err());
        assert!("3,1".parse::<StrictPartition>().is_ok());
    }
}

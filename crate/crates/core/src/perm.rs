//! Permutations in one-line notation and their basic algebra.
//!
//! Values are 1-based: a permutation of size `n` is a rearrangement of
//! `1..=n`. Any sequence of distinct integers can be turned into a
//! permutation with [`Permutation::standardize`], which keeps only the
//! relative order of the entries.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// The decreasing permutation `n n-1 ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    /// Builds a permutation from values that must already be exactly `1..=n`.
    pub fn from_one_line(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::ParsePermutation {
                    token: v.to_string(),
                    reason: format!("value out of range 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v as i64));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Replaces each entry by its rank among all entries.
    ///
    /// `(5, 8, 2)` becomes `2 3 1`. Duplicate entries are rejected.
    pub fn standardize<T: Ord + Copy + Into<i64>>(values: &[T]) -> Result<Self> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        for pair in order.windows(2) {
            if values[pair[0]] == values[pair[1]] {
                return Err(Error::DuplicateValue(values[pair[0]].into()));
            }
        }
        let mut out = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank + 1;
        }
        Ok(Permutation { values: out })
    }

    /// Standardizes a sequence already known to hold distinct values.
    pub(crate) fn standardize_distinct(values: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_unstable_by_key(|&i| values[i]);
        let mut out = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank + 1;
        }
        Permutation { values: out }
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_one_line(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// `π(i)` with 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Reads the permutation right to left.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            out[v - 1] = i + 1;
        }
        Permutation { values: out }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`. Sizes must agree.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation {
            values: other.values.iter().map(|&v| self.values[v - 1]).collect(),
        }
    }

    /// `α ⊕ β`: `α` followed by `β` shifted up by `|α|`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let a = self.len();
        let mut values = Vec::with_capacity(a + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|&v| v + a));
        Permutation { values }
    }

    /// `α ⊖ β`: `α` shifted up by `|β|`, followed by `β`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let b = other.len();
        let mut values = Vec::with_capacity(self.len() + b);
        values.extend(self.values.iter().map(|&v| v + b));
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.values[i] > self.values[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

pub(crate) fn max_position(values: &[usize]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .max_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses space- or comma-separated integers. The empty string, `e` and
/// `ε` denote the empty permutation. Entries need only be distinct; they
/// are standardized.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "ε" {
            return Ok(Permutation::empty());
        }
        let mut values = Vec::new();
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let v: i64 =
                token
                    .parse()
                    .map_err(|e: std::num::ParseIntError| Error::ParsePermutation {
                        token: token.to_string(),
                        reason: e.to_string(),
                    })?;
            values.push(v);
        }
        Permutation::standardize(&values)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

/// Shorthand for tests and examples: `perm!(3, 1, 2)` or `perm![]`.
#[macro_export]
macro_rules! perm {
    () => {
        $crate::Permutation::empty()
    };
    ($($v:expr),+ $(,)?) => {
        $crate::Permutation::from_one_line(vec![$($v),+]).expect("valid permutation literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standardize_examples() {
        assert_eq!(
            Permutation::standardize(&[5i64, 8, 2]).unwrap(),
            perm![2, 3, 1]
        );
        assert_eq!(
            Permutation::standardize::<i64>(&[]).unwrap(),
            Permutation::empty()
        );
        assert_eq!(
            Permutation::standardize(&[3i64, 1, 4, 2]).unwrap(),
            perm![3, 1, 4, 2]
        );
        assert_eq!(
            Permutation::standardize(&[-4i64, 10, 0]).unwrap(),
            perm![1, 3, 2]
        );
    }

    #[test]
    fn standardize_rejects_duplicates() {
        assert_eq!(
            Permutation::standardize(&[4i64, 7, 4]),
            Err(Error::DuplicateValue(4))
        );
    }

    #[test]
    fn from_one_line_rejects_non_permutations() {
        assert!(Permutation::from_one_line(vec![1, 3]).is_err());
        assert!(Permutation::from_one_line(vec![2, 2]).is_err());
        assert!(Permutation::from_one_line(vec![0]).is_err());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(perm![2, 3, 1].reverse(), perm![1, 3, 2]);
        assert_eq!(Permutation::empty().reverse(), Permutation::empty());
        assert_eq!(
            perm![6, 1, 3, 2, 7, 5, 4].reverse(),
            perm![4, 5, 7, 2, 3, 1, 6]
        );
    }

    #[test]
    fn sums() {
        let a = perm![2, 3, 1];
        let b = perm![3, 1, 4, 2];
        assert_eq!(a.direct_sum(&b), perm![2, 3, 1, 6, 4, 7, 5]);
        assert_eq!(a.skew_sum(&b), perm![6, 7, 5, 3, 1, 4, 2]);
        assert_eq!(Permutation::empty().direct_sum(&b), b);
        assert_eq!(a.skew_sum(&Permutation::empty()), a);
        assert_eq!(perm![1].direct_sum(&perm![1]), perm![1, 2]);
        assert_eq!(perm![1].skew_sum(&perm![1]), perm![2, 1]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(
            "6,1,3,2,7,5,4".parse::<Permutation>().unwrap(),
            perm![6, 1, 3, 2, 7, 5, 4]
        );
        assert_eq!("3 1 2".parse::<Permutation>().unwrap(), perm![3, 1, 2]);
        assert_eq!("10, 30 20".parse::<Permutation>().unwrap(), perm![1, 3, 2]);
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
        assert_eq!("e".parse::<Permutation>().unwrap(), Permutation::empty());
        assert_eq!("ε".parse::<Permutation>().unwrap(), Permutation::empty());
        assert!("1,x".parse::<Permutation>().is_err());
        assert!("1,1".parse::<Permutation>().is_err());
        assert_eq!(perm![3, 1, 2].to_string(), "3 1 2");
        assert_eq!(Permutation::empty().to_string(), "e");
    }

    #[test]
    fn compose_and_inverse() {
        let p = perm![3, 1, 4, 2];
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(perm![2, 1, 3].compose(&perm![1, 3, 2]), perm![2, 3, 1]);
    }

    #[test]
    fn serde_is_a_plain_list() {
        let p = perm![2, 3, 1];
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[2,3,1]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}

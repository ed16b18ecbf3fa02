use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate value {0} in permutation input")]
    DuplicateValue(i64),

    #[error("cannot parse permutation entry {token:?}: {reason}")]
    ParsePermutation { token: String, reason: String },

    #[error("unknown operator token {token:?} at position {position}")]
    ParseOperator { token: String, position: usize },

    #[error("{perm} contains the pattern {pattern}")]
    ContainsPattern {
        perm: Permutation,
        pattern: &'static str,
    },

    #[error("child label {child} is not smaller than its parent label {parent}")]
    NotDecreasing { parent: usize, child: usize },

    #[error("index {k} is out of range for size {n} (expected 0 <= k <= n-1)")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("size {0} must be at least 1")]
    SizeTooSmall(usize),

    #[error("power series has constant term {0}; only units can be inverted")]
    NotInvertible(i128),

    #[error("integer overflow in power series arithmetic")]
    Overflow,

    #[error("scale limit: more than {limit} permutations generated while computing preimages")]
    BudgetExceeded { limit: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

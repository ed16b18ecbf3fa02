//! Compositions of the stack-sorting operator `S` and the reversal `R`.
//!
//! An [`OperatorExpr`] is written as in functional composition: the
//! leftmost letter is applied **last**. `"S∘R∘S"` maps `θ` to
//! `S(R(S(θ)))`, and `"SRS"` means the same thing.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::preimage::{apply_s, preimages_s};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// Stack sorting.
    S,
    /// Reversal.
    R,
}

impl Op {
    pub fn apply(self, pi: &Permutation) -> Permutation {
        match self {
            Op::S => apply_s(pi),
            Op::R => pi.reverse(),
        }
    }

    /// Every `θ` with `self(θ) = pi`, sorted.
    pub fn preimages(self, pi: &Permutation) -> Vec<Permutation> {
        match self {
            Op::S => preimages_s(pi),
            Op::R => vec![pi.reverse()],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct OperatorExpr {
    /// `word[0]` is applied last.
    word: Vec<Op>,
}

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr { word: Vec::new() }
    }

    pub fn new(word: Vec<Op>) -> Self {
        OperatorExpr { word }
    }

    pub fn word(&self) -> &[Op] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `op ∘ self`.
    pub fn after(&self, op: Op) -> Self {
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(op);
        word.extend_from_slice(&self.word);
        OperatorExpr { word }
    }

    /// `self ∘ op`.
    pub fn then_first(&self, op: Op) -> Self {
        let mut word = self.word.clone();
        word.push(op);
        OperatorExpr { word }
    }

    pub fn apply(&self, pi: &Permutation) -> Permutation {
        self.word
            .iter()
            .rev()
            .fold(pi.clone(), |acc, op| op.apply(&acc))
    }

    /// Every `θ` of the same size as `pi` with `self(θ) = pi`, sorted and
    /// deduplicated. Computed stage by stage from the outermost operator
    /// inwards: `R⁻¹ = R`, and `S⁻¹` through decreasing trees.
    pub fn preimages(&self, pi: &Permutation) -> Vec<Permutation> {
        self.preimages_budgeted(pi, usize::MAX)
            .expect("unbounded budget cannot be exceeded")
    }

    /// [`preimages`](Self::preimages), aborting with
    /// [`Error::BudgetExceeded`] once more than `budget` permutations have
    /// been produced across all stages.
    pub fn preimages_budgeted(&self, pi: &Permutation, budget: usize) -> Result<Vec<Permutation>> {
        let mut current: BTreeSet<Permutation> = BTreeSet::from([pi.clone()]);
        let mut produced = 0usize;
        for op in &self.word {
            let mut next = BTreeSet::new();
            for p in &current {
                let pre = op.preimages(p);
                produced = produced.saturating_add(pre.len());
                if produced > budget {
                    return Err(Error::BudgetExceeded { limit: budget });
                }
                next.extend(pre);
            }
            if next.is_empty() {
                return Ok(Vec::new());
            }
            current = next;
        }
        Ok(current.into_iter().collect())
    }

    pub fn in_image(&self, pi: &Permutation) -> bool {
        !self.preimages(pi).is_empty()
    }

    /// The same operator with adjacent `R R` pairs cancelled.
    pub fn reduced(&self) -> Self {
        let mut word: Vec<Op> = Vec::with_capacity(self.word.len());
        for &op in &self.word {
            if op == Op::R && word.last() == Some(&Op::R) {
                word.pop();
            } else {
                word.push(op);
            }
        }
        OperatorExpr { word }
    }

    /// True when the first operator applied is `S`, i.e. `A = A₀ ∘ S`.
    pub fn ends_with_s(&self) -> bool {
        self.word.last() == Some(&Op::S)
    }

    /// True when `A = B₀ ∘ S ∘ R ∘ Sᵏ` with `k ≥ 1`, after cancelling
    /// `R R` pairs.
    pub fn has_s_r_s_suffix(&self) -> bool {
        let reduced = self.reduced();
        let w = reduced.word();
        let trailing_s = w.iter().rev().take_while(|&&op| op == Op::S).count();
        if trailing_s == 0 || trailing_s == w.len() {
            return false;
        }
        let r_at = w.len() - trailing_s - 1;
        // No R R remains, so w[r_at] is R; it needs an S just before it.
        r_at >= 1 && w[r_at - 1] == Op::S
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("id");
        }
        for (i, op) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str("∘")?;
            }
            f.write_str(match op {
                Op::S => "S",
                Op::R => "R",
            })?;
        }
        Ok(())
    }
}

/// Accepts the letters `S` and `R`, optionally separated by `∘`, `o` or
/// whitespace. `id` may stand for the identity; the empty string is the
/// identity as well.
impl FromStr for OperatorExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut word = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                'S' => word.push(Op::S),
                'R' => word.push(Op::R),
                '∘' | 'o' => {}
                'i' if chars.get(i + 1) == Some(&'d') => i += 1,
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::ParseOperator {
                        token: c.to_string(),
                        position: i,
                    })
                }
            }
            i += 1;
        }
        Ok(OperatorExpr { word })
    }
}

impl TryFrom<String> for OperatorExpr {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<OperatorExpr> for String {
    fn from(a: OperatorExpr) -> String {
        a.to_string()
    }
}

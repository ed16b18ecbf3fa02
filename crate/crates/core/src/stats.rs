//! Permutation statistics tracked by the equidistribution checks.
//!
//! Positions are 1-based throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StatVector {
    pub lr_maxima_positions: Vec<usize>,
    pub rl_maxima_positions: Vec<usize>,
    /// Word over `{u, d}` of length `n - 1`.
    pub updown_word: String,
    pub descent_set: Vec<usize>,
    pub major_index: usize,
    pub peak_count: usize,
    pub inversions: usize,
    pub zeil: usize,
    pub rzeil: usize,
}

pub fn stats(pi: &Permutation) -> StatVector {
    let v = pi.values();

    let mut lr_maxima_positions = Vec::new();
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x > best {
            best = x;
            lr_maxima_positions.push(i + 1);
        }
    }

    let mut rl_maxima_positions = Vec::new();
    best = 0;
    for (i, &x) in v.iter().enumerate().rev() {
        if x > best {
            best = x;
            rl_maxima_positions.push(i + 1);
        }
    }
    rl_maxima_positions.reverse();

    let updown_word: String = v
        .windows(2)
        .map(|w| if w[0] < w[1] { 'u' } else { 'd' })
        .collect();
    let descent_set: Vec<usize> = updown_word
        .char_indices()
        .filter(|&(_, c)| c == 'd')
        .map(|(i, _)| i + 1)
        .collect();
    let major_index = descent_set.iter().sum();
    let peak_count = updown_word.matches("ud").count();

    StatVector {
        lr_maxima_positions,
        rl_maxima_positions,
        updown_word,
        descent_set,
        major_index,
        peak_count,
        inversions: pi.inversions(),
        zeil: zeil(pi),
        rzeil: rzeil(pi),
    }
}

/// Largest `k` such that `n, n-1, ..., n-k+1` occur in this order.
pub fn zeil(pi: &Permutation) -> usize {
    top_run(pi, |earlier, later| earlier < later)
}

/// Largest `k` such that `n-k+1, ..., n-1, n` occur in this order.
pub fn rzeil(pi: &Permutation) -> usize {
    top_run(pi, |earlier, later| earlier > later)
}

// `in_order(pos(v), pos(v - 1))` decides whether the run continues to v-1.
fn top_run(pi: &Permutation, in_order: impl Fn(usize, usize) -> bool) -> usize {
    let n = pi.len();
    if n == 0 {
        return 0;
    }
    let inv = pi.inverse();
    let mut k = 1;
    while k < n && in_order(inv.at(n - k + 1), inv.at(n - k)) {
        k += 1;
    }
    k
}

/// A named component (or derived quantity) of [`StatVector`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    LrMaximaPositions,
    LrMaximaCount,
    RlMaximaPositions,
    RlMaximaCount,
    UpdownWord,
    DescentSet,
    MajorIndex,
    PeakCount,
    Zeil,
    Rzeil,
}

impl Statistic {
    /// Statistics read off the shape of the in-order tree.
    pub const SHAPE_DETERMINED: [Statistic; 8] = [
        Statistic::LrMaximaPositions,
        Statistic::LrMaximaCount,
        Statistic::RlMaximaPositions,
        Statistic::RlMaximaCount,
        Statistic::UpdownWord,
        Statistic::DescentSet,
        Statistic::MajorIndex,
        Statistic::PeakCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::LrMaximaPositions => "lr_maxima_positions",
            Statistic::LrMaximaCount => "lr_maxima_count",
            Statistic::RlMaximaPositions => "rl_maxima_positions",
            Statistic::RlMaximaCount => "rl_maxima_count",
            Statistic::UpdownWord => "updown_word",
            Statistic::DescentSet => "descent_set",
            Statistic::MajorIndex => "major_index",
            Statistic::PeakCount => "peak_count",
            Statistic::Zeil => "zeil",
            Statistic::Rzeil => "rzeil",
        }
    }

    /// Text rendering of the statistic's value, used as a sort key for
    /// multiset comparisons.
    pub fn project(self, s: &StatVector) -> String {
        fn list(v: &[usize]) -> String {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        }
        match self {
            Statistic::LrMaximaPositions => list(&s.lr_maxima_positions),
            Statistic::LrMaximaCount => s.lr_maxima_positions.len().to_string(),
            Statistic::RlMaximaPositions => list(&s.rl_maxima_positions),
            Statistic::RlMaximaCount => s.rl_maxima_positions.len().to_string(),
            Statistic::UpdownWord => s.updown_word.clone(),
            Statistic::DescentSet => list(&s.descent_set),
            Statistic::MajorIndex => s.major_index.to_string(),
            Statistic::PeakCount => s.peak_count.to_string(),
            Statistic::Zeil => s.zeil.to_string(),
            Statistic::Rzeil => s.rzeil.to_string(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

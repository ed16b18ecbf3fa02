//! Pattern containment and lexicographic enumeration of permutations and
//! permutation classes.

use crate::perm::Permutation;

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
///
/// Works on any sequences of distinct values; neither needs to be
/// standardized. Every sequence contains the empty pattern.
pub fn contains_slice(text: &[usize], pattern: &[usize]) -> bool {
    if pattern.len() > text.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    embed(text, pattern, 0, &mut chosen, None)
}

/// Like [`contains_slice`], but only counts occurrences that use the last
/// entry of `text`. Used to extend avoiding prefixes one entry at a time.
fn contains_using_last(text: &[usize], pattern: &[usize]) -> bool {
    let (Some((&last_t, rest_t)), Some((&last_p, rest_p))) =
        (text.split_last(), pattern.split_last())
    else {
        return false;
    };
    if rest_p.len() > rest_t.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(rest_p.len());
    embed(rest_t, rest_p, 0, &mut chosen, Some((last_t, last_p)))
}

// Backtracking over increasing index tuples. `chosen[j]` is the text index
// matched with `pattern[j]`; a candidate must agree in relative order with
// every earlier choice (and with the pinned pair, when present).
fn embed(
    text: &[usize],
    pattern: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    pinned: Option<(usize, usize)>,
) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    let p = pattern[j];
    for i in start..=text.len() - remaining {
        let t = text[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&ci, &pl)| (pl < p) == (text[ci] < t))
            && pinned.is_none_or(|(pt, pp)| (pp < p) == (pt < t));
        if consistent {
            chosen.push(i);
            if embed(text, pattern, i + 1, chosen, pinned) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains(sigma: &Permutation, pattern: &Permutation) -> bool {
    contains_slice(sigma.values(), pattern.values())
}

pub fn avoids(sigma: &Permutation, pattern: &Permutation) -> bool {
    !contains(sigma, pattern)
}

pub fn avoids_all<'a, I>(sigma: &Permutation, basis: I) -> bool
where
    I: IntoIterator<Item = &'a Permutation>,
{
    basis.into_iter().all(|p| avoids(sigma, p))
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn enumerate(n: usize) -> Permutations {
    Permutations {
        current: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_lexicographic(&mut next) {
            self.current = Some(next);
        }
        Some(Permutation::from_vec_unchecked(out))
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Members of `Av(basis)` of size `n`, in lexicographic order.
///
/// Prefixes are extended depth-first and dropped as soon as they contain a
/// basis element, since every extension would contain it too.
pub fn enumerate_avoiders(basis: &[Permutation], n: usize) -> Avoiders {
    let dead = basis.iter().any(|b| b.is_empty());
    Avoiders {
        basis: basis.iter().map(|b| b.values().to_vec()).collect(),
        n,
        prefix: Vec::with_capacity(n),
        used: vec![false; n + 1],
        stack: if dead { Vec::new() } else { vec![1] },
    }
}

pub struct Avoiders {
    basis: Vec<Vec<usize>>,
    n: usize,
    prefix: Vec<usize>,
    used: Vec<bool>,
    // stack[d] is the next candidate value to try at depth d.
    stack: Vec<usize>,
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        loop {
            let depth = self.stack.len().checked_sub(1)?;
            if depth == self.n {
                // Complete permutation sitting on the prefix; emit it once
                // and backtrack on the next call.
                let out = Permutation::from_vec_unchecked(self.prefix.clone());
                self.stack.pop();
                self.backtrack();
                return Some(out);
            }
            let candidate = self.stack[depth];
            if candidate > self.n {
                self.stack.pop();
                self.backtrack();
                continue;
            }
            self.stack[depth] = candidate + 1;
            if self.used[candidate] {
                continue;
            }
            self.prefix.push(candidate);
            let blocked = self
                .basis
                .iter()
                .any(|b| contains_using_last(&self.prefix, b));
            if blocked {
                self.prefix.pop();
                continue;
            }
            self.used[candidate] = true;
            self.stack.push(1);
        }
    }
}

impl Avoiders {
    fn backtrack(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v] = false;
        }
    }
}

//! The stack-sorting operator `S` and its preimages.
//!
//! `S(α n β) = S(α) S(β) n`, which is the post-order reading of the in-order
//! tree. Preimages of `τ` under `S` are therefore the in-order readings of
//! the decreasing trees with post-order reading `τ`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::perm::{max_position, Permutation};
use crate::tree::{in_order, post_order, tin, DecreasingTree, Side};

/// `S(π)` by the direct recursion on the position of the maximum.
pub fn apply_s(pi: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(pi.len());
    stack_sort_into(pi.values(), &mut out);
    Permutation::from_vec_unchecked(out)
}

fn stack_sort_into(word: &[usize], out: &mut Vec<usize>) {
    if let Some(m) = max_position(word) {
        stack_sort_into(&word[..m], out);
        stack_sort_into(&word[m + 1..], out);
        out.push(word[m]);
    }
}

/// `S(π)` as the post-order reading of the in-order tree of `π`.
pub fn apply_s_via_tree(pi: &Permutation) -> Permutation {
    post_order(&tin(pi))
}

/// All decreasing trees whose post-order reading is `tau`.
///
/// The last entry of each span must be its maximum (it is the root); the
/// rest of the span splits into a left part and a right part at every
/// possible point. Results are memoized per span. The list is empty exactly
/// when `tau` is not in the image of `S`.
pub fn trees_with_postorder(tau: &Permutation) -> Vec<DecreasingTree> {
    let mut memo = HashMap::new();
    let all = spans(tau.values(), 0, tau.len(), &mut memo);
    Rc::try_unwrap(all).unwrap_or_else(|rc| (*rc).clone())
}

type Memo = HashMap<(usize, usize), Rc<Vec<DecreasingTree>>>;

fn spans(word: &[usize], lo: usize, hi: usize, memo: &mut Memo) -> Rc<Vec<DecreasingTree>> {
    if let Some(hit) = memo.get(&(lo, hi)) {
        return Rc::clone(hit);
    }
    let result = if lo == hi {
        vec![DecreasingTree::Empty]
    } else {
        let root = word[hi - 1];
        let mut out = Vec::new();
        if word[lo..hi - 1].iter().all(|&v| v < root) {
            for split in lo..hi {
                let lefts = spans(word, lo, split, memo);
                if lefts.is_empty() {
                    continue;
                }
                let rights = spans(word, split, hi - 1, memo);
                for l in lefts.iter() {
                    for r in rights.iter() {
                        out.push(DecreasingTree::node_unchecked(root, l.clone(), r.clone()));
                    }
                }
            }
        }
        out
    };
    let result = Rc::new(result);
    memo.insert((lo, hi), Rc::clone(&result));
    result
}

/// Number of decreasing trees with post-order reading `tau`, without
/// building them.
pub fn count_preimages_s(tau: &Permutation) -> u128 {
    let word = tau.values();
    let n = word.len();
    // count[lo][hi] for the span word[lo..hi].
    let mut count = vec![vec![0u128; n + 1]; n + 1];
    for (lo, row) in count.iter_mut().enumerate() {
        row[lo] = 1;
    }
    for len in 1..=n {
        for lo in 0..=n - len {
            let hi = lo + len;
            let root = word[hi - 1];
            if word[lo..hi - 1].iter().any(|&v| v > root) {
                continue;
            }
            count[lo][hi] = (lo..hi).map(|s| count[lo][s] * count[s][hi - 1]).sum();
        }
    }
    count[0][n]
}

pub fn in_image_s(tau: &Permutation) -> bool {
    count_preimages_s(tau) > 0
}

/// The unique canonical tree with post-order reading `tau`, or `None` when
/// `tau` is not in the image of `S`.
///
/// Found by filtering [`trees_with_postorder`]; finding zero or several
/// canonical trees among a nonempty list is reported as an invariant
/// violation.
pub fn canonical_tree(tau: &Permutation) -> Result<Option<DecreasingTree>> {
    let trees = trees_with_postorder(tau);
    if trees.is_empty() {
        return Ok(None);
    }
    let mut canonical = trees.into_iter().filter(DecreasingTree::is_canonical);
    let first = canonical.next();
    let extra = canonical.count();
    match (first, extra) {
        (Some(t), 0) => Ok(Some(t)),
        (None, _) => Err(Error::Invariant(format!(
            "no canonical tree with post-order {tau}"
        ))),
        (Some(_), k) => Err(Error::Invariant(format!(
            "{} canonical trees with post-order {tau}",
            k + 1
        ))),
    }
}

/// Trees reachable from `t` by repeatedly detaching a subtree on the
/// leftmost branch of the right subtree of a vertex without left child, and
/// hanging it as that vertex's left subtree. Includes `t` itself.
pub fn star_expansions(t: &DecreasingTree) -> Vec<DecreasingTree> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(t.clone());
    queue.push_back(t.clone());
    while let Some(cur) = queue.pop_front() {
        for next in star_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

fn star_moves(t: &DecreasingTree) -> Vec<DecreasingTree> {
    let mut out = Vec::new();
    for z in t.vertex_paths() {
        let vertex = t.at_path(&z);
        if !vertex.left().is_empty() || vertex.right().is_empty() {
            continue;
        }
        let mut y = z.clone();
        y.push(Side::Right);
        while !t.at_path(&y).is_empty() {
            let mut moved = t.clone();
            let detached = std::mem::take(moved.at_path_mut(&y));
            let mut z_left = z.clone();
            z_left.push(Side::Left);
            *moved.at_path_mut(&z_left) = detached;
            out.push(moved);
            y.push(Side::Left);
        }
    }
    out
}

/// `S⁻¹(τ)`, sorted lexicographically.
pub fn preimages_s(tau: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = trees_with_postorder(tau).iter().map(in_order).collect();
    out.sort_unstable();
    out
}

//! Decreasing binary trees and their in-order / post-order readings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::{max_position, Permutation};

/// A binary tree whose labels strictly decrease from parent to child.
///
/// The derived `Ord` compares trees structurally and serves as the
/// canonical serialization for visited sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecreasingTree {
    #[default]
    Empty,
    Node(Box<Node>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub label: usize,
    pub left: DecreasingTree,
    pub right: DecreasingTree,
}

/// The unlabeled structure of a binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeShape {
    Empty,
    Node(Box<TreeShape>, Box<TreeShape>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

impl DecreasingTree {
    pub fn leaf(label: usize) -> Self {
        DecreasingTree::Node(Box::new(Node {
            label,
            left: DecreasingTree::Empty,
            right: DecreasingTree::Empty,
        }))
    }

    /// Joins two subtrees under a new root, checking that both child labels
    /// are smaller than `label`.
    pub fn node(label: usize, left: DecreasingTree, right: DecreasingTree) -> Result<Self> {
        for child in [&left, &right] {
            if let Some(c) = child.label() {
                if c >= label {
                    return Err(Error::NotDecreasing {
                        parent: label,
                        child: c,
                    });
                }
            }
        }
        Ok(Self::node_unchecked(label, left, right))
    }

    pub(crate) fn node_unchecked(
        label: usize,
        left: DecreasingTree,
        right: DecreasingTree,
    ) -> Self {
        DecreasingTree::Node(Box::new(Node { label, left, right }))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DecreasingTree::Empty)
    }

    pub fn label(&self) -> Option<usize> {
        match self {
            DecreasingTree::Empty => None,
            DecreasingTree::Node(n) => Some(n.label),
        }
    }

    pub fn left(&self) -> &DecreasingTree {
        match self {
            DecreasingTree::Empty => &DecreasingTree::Empty,
            DecreasingTree::Node(n) => &n.left,
        }
    }

    pub fn right(&self) -> &DecreasingTree {
        match self {
            DecreasingTree::Empty => &DecreasingTree::Empty,
            DecreasingTree::Node(n) => &n.right,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            DecreasingTree::Empty => 0,
            DecreasingTree::Node(n) => 1 + n.left.size() + n.right.size(),
        }
    }

    /// Left subtree, root, right subtree.
    pub fn in_order_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.push_in_order(&mut out);
        out
    }

    fn push_in_order(&self, out: &mut Vec<usize>) {
        if let DecreasingTree::Node(n) = self {
            n.left.push_in_order(out);
            out.push(n.label);
            n.right.push_in_order(out);
        }
    }

    /// Left subtree, right subtree, root.
    pub fn post_order_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        self.push_post_order(&mut out);
        out
    }

    fn push_post_order(&self, out: &mut Vec<usize>) {
        if let DecreasingTree::Node(n) = self {
            n.left.push_post_order(out);
            n.right.push_post_order(out);
            out.push(n.label);
        }
    }

    pub fn shape(&self) -> TreeShape {
        match self {
            DecreasingTree::Empty => TreeShape::Empty,
            DecreasingTree::Node(n) => {
                TreeShape::Node(Box::new(n.left.shape()), Box::new(n.right.shape()))
            }
        }
    }

    /// Decreasing along every edge, with pairwise distinct labels.
    pub fn is_decreasing(&self) -> bool {
        fn edges_ok(t: &DecreasingTree) -> bool {
            match t {
                DecreasingTree::Empty => true,
                DecreasingTree::Node(n) => {
                    [&n.left, &n.right]
                        .iter()
                        .all(|c| c.label().is_none_or(|c| c < n.label))
                        && edges_ok(&n.left)
                        && edges_ok(&n.right)
                }
            }
        }
        let mut labels = self.in_order_word();
        labels.sort_unstable();
        labels.windows(2).all(|w| w[0] != w[1]) && edges_ok(self)
    }

    /// Applies `f` to every label, keeping the structure.
    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> DecreasingTree {
        match self {
            DecreasingTree::Empty => DecreasingTree::Empty,
            DecreasingTree::Node(n) => {
                Self::node_unchecked(f(n.label), n.left.relabel(f), n.right.relabel(f))
            }
        }
    }

    /// Label reached from the root by following left children.
    pub fn leftmost_label(&self) -> Option<usize> {
        let mut cur = self;
        let mut found = None;
        while let DecreasingTree::Node(n) = cur {
            found = Some(n.label);
            cur = &n.left;
        }
        found
    }

    /// Every vertex `z` with a left child `x` also has a right child, and
    /// the leftmost label of that right subtree is smaller than `x`.
    pub fn is_canonical(&self) -> bool {
        match self {
            DecreasingTree::Empty => true,
            DecreasingTree::Node(n) => {
                let here = match n.left.label() {
                    None => true,
                    Some(x) => n.right.leftmost_label().is_some_and(|y| y < x),
                };
                here && n.left.is_canonical() && n.right.is_canonical()
            }
        }
    }

    pub(crate) fn at_path(&self, path: &[Side]) -> &DecreasingTree {
        path.iter().fold(self, |t, side| match side {
            Side::Left => t.left(),
            Side::Right => t.right(),
        })
    }

    pub(crate) fn at_path_mut(&mut self, path: &[Side]) -> &mut DecreasingTree {
        let mut cur = self;
        for side in path {
            cur = match cur {
                DecreasingTree::Empty => panic!("path leaves the tree"),
                DecreasingTree::Node(n) => match side {
                    Side::Left => &mut n.left,
                    Side::Right => &mut n.right,
                },
            };
        }
        cur
    }

    /// Paths to every vertex, in pre-order.
    pub(crate) fn vertex_paths(&self) -> Vec<Vec<Side>> {
        fn walk(t: &DecreasingTree, path: &mut Vec<Side>, out: &mut Vec<Vec<Side>>) {
            if let DecreasingTree::Node(n) = t {
                out.push(path.clone());
                path.push(Side::Left);
                walk(&n.left, path, out);
                path.pop();
                path.push(Side::Right);
                walk(&n.right, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Graphviz rendering. Node ids are labels; the left edge is written
    /// before the right one, and a missing child of a vertex with exactly
    /// one child is drawn as an invisible placeholder so the side stays
    /// readable.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {graph_name} {{").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        self.write_dot(&mut out);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String) {
        let DecreasingTree::Node(n) = self else {
            return;
        };
        writeln!(out, "  {};", n.label).unwrap();
        let has_children = !n.left.is_empty() || !n.right.is_empty();
        for (child, side) in [(&n.left, "l"), (&n.right, "r")] {
            match child.label() {
                Some(c) => writeln!(out, "  {} -> {};", n.label, c).unwrap(),
                None if has_children => {
                    let id = format!("nil{}{}", n.label, side);
                    writeln!(out, "  {id} [label=\"\", style=invis];").unwrap();
                    writeln!(out, "  {} -> {id} [style=invis];", n.label).unwrap();
                }
                None => {}
            }
        }
        n.left.write_dot(out);
        n.right.write_dot(out);
    }
}

/// The unique decreasing tree whose in-order reading is `pi`.
pub fn tin(pi: &Permutation) -> DecreasingTree {
    tin_word(pi.values())
}

/// [`tin`] on any word of distinct values.
pub fn tin_word(word: &[usize]) -> DecreasingTree {
    match max_position(word) {
        None => DecreasingTree::Empty,
        Some(m) => {
            DecreasingTree::node_unchecked(word[m], tin_word(&word[..m]), tin_word(&word[m + 1..]))
        }
    }
}

pub fn in_order(t: &DecreasingTree) -> Permutation {
    Permutation::standardize_distinct(&t.in_order_word())
}

pub fn post_order(t: &DecreasingTree) -> Permutation {
    Permutation::standardize_distinct(&t.post_order_word())
}

pub fn shape(t: &DecreasingTree) -> TreeShape {
    t.shape()
}

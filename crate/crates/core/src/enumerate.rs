//! Streaming enumeration of non-isomorphic free trees.
//!
//! Generates canonical level sequences with the Wright–Richmond–Odlyzko–
//! McKay successor rule layered over the Beyer–Hedetniemi rooted-tree
//! successor, yielding each isomorphism class exactly once in a fixed
//! deterministic order. Memory is O(n) per stream; amortized work per
//! tree is constant.

use rand::Rng;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Soft cap on the order; free-tree counts grow superexponentially and
/// nothing in the workbench needs more.
pub const ORDER_CAP: usize = 22;

/// Single-consumer stream of all free trees of a given order.
///
/// Yield order is deterministic, so censuses can partition the 0-based
/// index range across workers and resume from a recorded index.
pub struct TreeStream {
    n: usize,
    layout: Option<Vec<usize>>,
    index: usize,
}

/// Streams every non-isomorphic tree of order `n` exactly once.
pub fn enumerate_trees(n: usize) -> Result<TreeStream> {
    if n == 0 {
        return Err(Error::BadParam("order must be at least 1".into()));
    }
    if n > ORDER_CAP {
        return Err(Error::OrderTooLarge(n, ORDER_CAP));
    }
    let layout = if n == 1 {
        Some(vec![0])
    } else {
        // Start from the path rooted at its center.
        let mut layout: Vec<usize> = (0..n / 2 + 1).collect();
        layout.extend(1..n.div_ceil(2));
        Some(layout)
    };
    Ok(TreeStream { n, layout, index: 0 })
}

/// Exhausts a fresh stream and returns the number of isomorphism classes.
pub fn count_trees(n: usize) -> Result<usize> {
    let mut stream = enumerate_trees(n)?;
    let mut count = 0;
    while stream.step().is_some() {
        count += 1;
    }
    Ok(count)
}

impl Iterator for TreeStream {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.step().map(|layout| layout_to_tree(&layout))
    }
}

impl TreeStream {
    /// Index of the next tree to be yielded.
    pub fn position(&self) -> usize {
        self.index
    }

    /// Advances to the next accepted level sequence without building the
    /// tree; the cheap path behind both iteration and range skipping.
    fn step(&mut self) -> Option<Vec<usize>> {
        if self.n == 1 {
            let layout = self.layout.take()?;
            self.index += 1;
            return Some(layout);
        }
        let candidate = self.layout.take()?;
        let accepted = next_free_tree(candidate)?;
        self.layout = next_rooted_tree(&accepted, None);
        self.index += 1;
        Some(accepted)
    }

    /// Skips `count` trees without materializing them.
    pub fn skip_trees(&mut self, count: usize) {
        for _ in 0..count {
            if self.step().is_none() {
                break;
            }
        }
    }
}

/// Beyer–Hedetniemi successor over rooted level sequences, descending
/// lexicographic order. `None` once the star (all levels 1) is passed.
fn next_rooted_tree(pred: &[usize], p_override: Option<usize>) -> Option<Vec<usize>> {
    let p = match p_override {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                if p == 0 {
                    return None;
                }
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits a level sequence into the root's first subtree (levels shifted
/// down by one) and the remainder.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_seen = false;
    let mut m = layout.len();
    for (i, &lvl) in layout.iter().enumerate() {
        if lvl == 1 {
            if one_seen {
                m = i;
                break;
            }
            one_seen = true;
        }
    }
    let left: Vec<usize> = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// WROM free-tree filter: accepts `candidate` if its first subtree is the
/// canonical "light" side, otherwise jumps directly past the rejected
/// region of rooted trees.
fn next_free_tree(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split_tree(&candidate);
        let left_height = left.iter().max().copied().unwrap_or(0);
        let rest_height = rest.iter().max().copied().unwrap_or(0);
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let mut next = next_rooted_tree(&candidate, Some(p))?;
        if candidate[p] > 2 {
            let (new_left, _) = split_tree(&next);
            let new_height = new_left.iter().max().copied().unwrap_or(0);
            let suffix_len = new_height + 1;
            let start = next.len() - suffix_len;
            for (offset, lvl) in (1..=suffix_len).enumerate() {
                next[start + offset] = lvl;
            }
        }
        candidate = next;
    }
}

/// Decodes a level sequence (root level 0) into an explicit tree: each
/// vertex attaches to the most recent vertex one level shallower.
fn layout_to_tree(layout: &[usize]) -> Tree {
    let n = layout.len();
    let mut edges = Vec::with_capacity(n - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &lvl) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= lvl {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Tree::from_edges(n, &edges).expect("level sequence decodes to a tree")
}

/// Decodes a Prüfer sequence of length `n - 2` into the labeled tree on
/// `n` vertices it encodes.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    if seq.iter().any(|&v| v >= n) {
        return Err(Error::BadParam("Prüfer entry out of range".into()));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // ptr/leaf walk: O(n) amortized.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges(n, &edges)
}

/// Uniform random labeled tree on `n` vertices via a random Prüfer
/// sequence. Used by property tests and Monte Carlo checks.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::from_edges(1, &[]).expect("K1");
    }
    if n == 2 {
        return Tree::from_edges(2, &[(0, 1)]).expect("P2");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    tree_from_pruefer(&seq).expect("random Prüfer sequence decodes")
}

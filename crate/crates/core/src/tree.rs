//! Trees, distance distributions, and the multiplicity-weighted caterpillar.
//!
//! A [`Tree`] is an explicit labeled tree on contiguous 0-indexed vertices.
//! Its [`DistanceDistribution`] holds the exact pair counts `d_1..d_D` that
//! feed the Wiener polynomial. A [`WeightedCaterpillar`] represents
//! spine-plus-pendant-leaves trees whose leaf multiplicities are far too
//! large to expand explicitly; its distribution is computed in closed form.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Orders above this must be supplied as [`WeightedCaterpillar`]; the
/// BFS-per-vertex distribution is quadratic in the order.
pub const EXPLICIT_ORDER_THRESHOLD: usize = 100_000;

/// An explicit labeled tree: `n` vertices `0..n`, adjacency lists.
///
/// Immutable after construction; validated to be connected and acyclic
/// with exactly `n - 1` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds and validates a tree from an undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("order must be at least 1".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "expected {} edges for order {}, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::BadLabel { label: u, order: n });
            }
            if v >= n {
                return Err(Error::BadLabel { label: v, order: n });
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::NotATree(format!("parallel edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let tree = Tree { adj };
        // n-1 edges and connected together rule out cycles.
        if tree.bfs_reach(0) != n {
            return Err(Error::NotATree("graph is not connected".into()));
        }
        Ok(tree)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Undirected edges with `u < v`, in vertex order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn bfs_reach(&self, start: usize) -> usize {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }

    /// Distances from `start` to every vertex.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Exact distance distribution via BFS from every vertex.
    ///
    /// Each ordered pair is seen once from each endpoint, so the raw
    /// counts are halved at the end.
    pub fn distance_distribution(&self) -> DistanceDistribution {
        let n = self.order();
        let mut counts = vec![0u64; n];
        for s in 0..n {
            for (v, &d) in self.bfs_distances(s).iter().enumerate() {
                if v != s {
                    counts[d] += 1;
                }
            }
        }
        let diameter = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
        let counts = counts[1..=diameter]
            .iter()
            .map(|&c| BigInt::from(c / 2))
            .collect();
        DistanceDistribution { order: n, counts }
    }

    /// Length of a longest shortest path.
    pub fn diameter(&self) -> usize {
        if self.order() == 1 {
            return 0;
        }
        // Two sweeps suffice on a tree.
        let d0 = self.bfs_distances(0);
        let far = (0..self.order()).max_by_key(|&v| d0[v]).unwrap();
        let d1 = self.bfs_distances(far);
        d1.into_iter().max().unwrap()
    }

    /// The one or two central vertices (minimum eccentricity), found by
    /// peeling leaves layer by layer.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &frontier {
                removed[v] = true;
                remaining -= 1;
                for &u in &self.adj[v] {
                    if !removed[u] {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            frontier = next;
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }

    /// Canonical AHU encoding rooted at the tree's center; the minimum is
    /// taken over the two central vertices when the center is an edge.
    /// Equal codes hold exactly for isomorphic trees.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_code(c))
            .min()
            .expect("tree has at least one center")
    }

    fn rooted_code(&self, root: usize) -> Vec<u8> {
        // Iterative post-order to avoid recursion depth limits on paths.
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
        let mut out = vec![Vec::new(); n];
        for &u in order.iter().rev() {
            let mut children = std::mem::take(&mut codes[u]);
            children.sort();
            let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
            code.push(b'(');
            for c in children {
                code.extend_from_slice(&c);
            }
            code.push(b')');
            if u == root {
                out[root] = code;
            } else {
                codes[parent[u]].push(code);
            }
        }
        std::mem::take(&mut out[root])
    }
}

/// Exact counts of unordered vertex pairs per distance `1..=D`.
///
/// `counts[i]` stores `d_{i+1}`; the last entry is nonzero so the length
/// is the true diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    order: usize,
    counts: Vec<BigInt>,
}

impl DistanceDistribution {
    /// Wraps raw counts `d_1..d_D`, checking the structural invariants:
    /// no trailing zero and total equal to `C(n, 2)`.
    pub fn new(order: usize, counts: Vec<BigInt>) -> Result<Self> {
        if let Some(last) = counts.last() {
            if last.is_zero() {
                return Err(Error::BadParam("trailing zero distance count".into()));
            }
        }
        if counts.iter().any(|c| c.sign() == num_bigint::Sign::Minus) {
            return Err(Error::BadParam("negative distance count".into()));
        }
        let total: BigInt = counts.iter().sum();
        let n = BigInt::from(order);
        if total * 2 != &n * (&n - 1) {
            return Err(Error::BadParam(format!(
                "distance counts do not sum to C({order}, 2)"
            )));
        }
        Ok(DistanceDistribution { order, counts })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `d_1..d_D`.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `d_i`, zero outside `1..=D`.
    pub fn count_at(&self, distance: usize) -> BigInt {
        if distance == 0 || distance > self.counts.len() {
            BigInt::zero()
        } else {
            self.counts[distance - 1].clone()
        }
    }

    pub fn diameter(&self) -> usize {
        self.counts.len()
    }
}

/// A spine of `s` vertices with `m_j` pendant leaves on spine vertex `j`.
///
/// Multiplicities are arbitrary-precision: the all-real-root construction
/// uses leaf counts far beyond machine integers. When `s >= 2` both end
/// multiplicities must be positive, otherwise the spine would not be
/// maximal and the diameter would not be `s + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCaterpillar {
    multiplicities: Vec<BigInt>,
}

impl WeightedCaterpillar {
    pub fn new(multiplicities: Vec<BigInt>) -> Result<Self> {
        if multiplicities.is_empty() {
            return Err(Error::InvalidCaterpillar("empty spine".into()));
        }
        if multiplicities
            .iter()
            .any(|m| m.sign() == num_bigint::Sign::Minus)
        {
            return Err(Error::InvalidCaterpillar("negative multiplicity".into()));
        }
        let s = multiplicities.len();
        if s >= 2 && (multiplicities[0].is_zero() || multiplicities[s - 1].is_zero()) {
            return Err(Error::InvalidCaterpillar(
                "end spine vertices must carry at least one leaf".into(),
            ));
        }
        Ok(WeightedCaterpillar { multiplicities })
    }

    pub fn spine_len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[BigInt] {
        &self.multiplicities
    }

    /// Total vertex count `s + sum m_j`.
    pub fn order(&self) -> BigInt {
        let leaves: BigInt = self.multiplicities.iter().sum();
        leaves + BigInt::from(self.spine_len())
    }

    /// Exact distance distribution by group convolution, `O(s^2)` work
    /// independent of the multiplicities.
    ///
    /// Pair groups: spine-spine at `|i-j|`; leaf(i)-spine(j) at
    /// `|i-j| + 1`; leaf(i)-leaf(j) at `|i-j| + 2` for `i != j`; same-hub
    /// leaf pairs `C(m_i, 2)` at distance 2.
    #[allow(clippy::needless_range_loop)] // index arithmetic carries the distances
    pub fn distance_distribution(&self) -> Result<DistanceDistribution> {
        let s = self.spine_len();
        let m = &self.multiplicities;
        let mut counts = vec![BigInt::zero(); s + 2];
        for i in 0..s {
            for j in (i + 1)..s {
                counts[j - i] += 1;
            }
        }
        for i in 0..s {
            for j in 0..s {
                let d = i.abs_diff(j) + 1;
                counts[d] += &m[i];
            }
        }
        for i in 0..s {
            counts[2] += (&m[i] * (&m[i] - BigInt::one())) / BigInt::from(2);
            for j in (i + 1)..s {
                counts[j - i + 2] += &m[i] * &m[j];
            }
        }
        let diameter = counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        let order = self
            .order()
            .to_usize()
            .ok_or_else(|| Error::InvalidCaterpillar("order exceeds usize".into()))?;
        DistanceDistribution::new(order, counts[1..=diameter].to_vec())
    }

    /// Expands to an explicit tree. Fails when the order is impractically
    /// large for adjacency lists.
    pub fn expand(&self) -> Result<Tree> {
        let order = self
            .order()
            .to_usize()
            .filter(|&n| n <= EXPLICIT_ORDER_THRESHOLD)
            .ok_or_else(|| {
                Error::InvalidCaterpillar(format!(
                    "order {} too large to expand explicitly",
                    self.order()
                ))
            })?;
        let s = self.spine_len();
        let mut edges = Vec::with_capacity(order - 1);
        for i in 1..s {
            edges.push((i - 1, i));
        }
        let mut next = s;
        for (i, mult) in self.multiplicities.iter().enumerate() {
            let count = mult.to_usize().expect("order bound checked");
            for _ in 0..count {
                edges.push((i, next));
                next += 1;
            }
        }
        Tree::from_edges(order, &edges)
    }
}

/// Convenience constructors used across tests and families.
pub fn path_tree(n: usize) -> Tree {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges).expect("path is a tree")
}

pub fn star_tree(leaves: usize) -> Tree {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Tree::from_edges(leaves + 1, &edges).expect("star is a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_tree_accepts_paths() {
        let t = Tree::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(t.order(), 2);
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t.diameter(), 3);
    }

    #[test]
    fn build_tree_rejects_cycles_and_bad_labels() {
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Tree::from_edges(3, &[(0, 1), (1, 3)]),
            Err(Error::BadLabel { label: 3, order: 3 })
        ));
        // Right edge count but disconnected (and with a parallel edge).
        assert!(Tree::from_edges(4, &[(0, 1), (0, 1), (2, 3)]).is_err());
        assert!(Tree::from_edges(3, &[(0, 0), (1, 2)]).is_err());
    }

    #[test]
    fn distribution_of_small_trees() {
        let p4 = path_tree(4);
        let dd = p4.distance_distribution();
        assert_eq!(dd.counts(), &[3.into(), 2.into(), 1.into()]);
        assert_eq!(dd.diameter(), 3);

        let star = star_tree(3);
        let dd = star.distance_distribution();
        assert_eq!(dd.counts(), &[3.into(), 3.into()]);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        // P4 under two different labelings.
        let a = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        let star = star_tree(3);
        assert_ne!(a.canonical_code(), star.canonical_code());
    }

    #[test]
    fn caterpillar_distribution_matches_expansion() {
        let c = WeightedCaterpillar::new(vec![2.into(), 1.into(), 2.into()]).unwrap();
        let closed = c.distance_distribution().unwrap();
        let expanded = c.expand().unwrap().distance_distribution();
        assert_eq!(closed, expanded);
        assert_eq!(closed.order(), 8);
    }

    #[test]
    fn caterpillar_degenerate_shapes() {
        let star = WeightedCaterpillar::new(vec![4.into()]).unwrap();
        let dd = star.distance_distribution().unwrap();
        assert_eq!(dd.counts(), &[4.into(), 6.into()]);

        let p4 = WeightedCaterpillar::new(vec![1.into(), 1.into()]).unwrap();
        let dd = p4.distance_distribution().unwrap();
        assert_eq!(dd.counts(), &[3.into(), 2.into(), 1.into()]);
    }

    #[test]
    fn caterpillar_rejects_bare_spine_end() {
        assert!(WeightedCaterpillar::new(vec![0.into(), 5.into()]).is_err());
    }
}

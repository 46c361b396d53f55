//! Canonical graph families with fixed labelings.
//!
//! Paths and trees are labelled root-first with edges pointing back toward
//! the root, so node 1 is always the globally reachable node. All
//! constructors panic on non-positive weights.

use super::DiGraph;

/// Directed path `N -> N-1 -> ... -> 1`, with `weights[i-1]` on edge `i+1 -> i`.
pub fn directed_path(weights: &[f64]) -> DiGraph {
    assert!(!weights.is_empty(), "path needs at least one edge");
    let n = weights.len() + 1;
    let edges: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (i + 2, i + 1, w)).collect();
    DiGraph::from_edges(n, &edges).expect("valid path weights")
}

pub fn unit_path(nodes: usize) -> DiGraph {
    directed_path(&vec![1.0; nodes - 1])
}

/// Directed cycle on `weights.len()` nodes: edge `1 -> N` carries `weights[0]`
/// and edge `i+1 -> i` carries `weights[i]`.
pub fn directed_cycle(weights: &[f64]) -> DiGraph {
    let n = weights.len();
    assert!(n >= 2, "cycle needs at least two nodes");
    let mut edges = vec![(1, n, weights[0])];
    edges.extend((1..n).map(|i| (i + 1, i, weights[i])));
    DiGraph::from_edges(n, &edges).expect("valid cycle weights")
}

/// Two-branch unit-weight in-tree: branch lengths `n` and `m` meeting at
/// root node 1. Returns `(graph, k, j)` where `k` ends the length-`n` branch
/// and `j` ends the length-`m` branch (either is the root if its length is 0).
pub fn two_branch_tree(n: usize, m: usize) -> (DiGraph, usize, usize) {
    two_branch_tree_with_tail(n, m, 0)
}

/// [`two_branch_tree`] with an extra directed path of `tail` unit edges
/// leaving the root: `1 -> n+m+2 -> ... -> n+m+1+tail`.
pub fn two_branch_tree_with_tail(n: usize, m: usize, tail: usize) -> (DiGraph, usize, usize) {
    assert!(n + m >= 1, "tree needs at least one edge");
    let nodes = n + m + 1 + tail;
    let mut g = DiGraph::new(nodes).expect("nonempty");
    for i in 2..=n + 1 {
        g.add_edge(i, i - 1, 1.0).unwrap();
    }
    for i in n + 2..=n + m + 1 {
        let head = if i == n + 2 { 1 } else { i - 1 };
        g.add_edge(i, head, 1.0).unwrap();
    }
    let mut prev = 1;
    for t in n + m + 2..=nodes {
        g.add_edge(prev, t, 1.0).unwrap();
        prev = t;
    }
    let k = if n == 0 { 1 } else { n + 1 };
    let j = if m == 0 { 1 } else { n + m + 1 };
    (g, k, j)
}

/// Three-node star: leaves 2 and 3 each point at node 1.
pub fn star3(w2: f64, w3: f64) -> DiGraph {
    DiGraph::from_edges(3, &[(2, 1, w2), (3, 1, w3)]).expect("valid star weights")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_layout() {
        let (g, k, j) = two_branch_tree(3, 2);
        assert_eq!(g.node_count(), 6);
        assert_eq!((k, j), (4, 6));
        let edges: Vec<_> = g.edges().map(|(a, b, _)| (a, b)).collect();
        assert_eq!(edges, vec![(2, 1), (3, 2), (4, 3), (5, 1), (6, 5)]);
    }

    #[test]
    fn degenerate_tree_is_a_path() {
        let (g, k, j) = two_branch_tree(3, 0);
        assert_eq!(g, unit_path(4));
        assert_eq!((k, j), (4, 1));
    }

    #[test]
    fn tail_leaves_root() {
        let (g, _, _) = two_branch_tree_with_tail(1, 1, 2);
        assert_eq!(g.weight(1, 4), 1.0);
        assert_eq!(g.weight(4, 5), 1.0);
        assert!(g.is_connected());
    }
}

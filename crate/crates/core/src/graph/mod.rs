//! Weighted directed graphs, Laplacians and connectivity.
//!
//! Node indices in this module's public API are 1-based. An edge `(i, j)`
//! with weight `a_ij` contributes to row `i` of the adjacency matrix and to
//! the out-degree of node `i`.

mod connection;
mod edgelist;
pub mod families;
mod permutation;

use std::collections::{BTreeMap, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph as PetGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::RealMatrix;

pub use connection::{classify_connection, ConnectionClass};
pub use permutation::{find_degree_permutation, Permutation};

#[derive(Clone, Debug, PartialEq)]
pub struct DiGraph {
    n: usize,
    weights: BTreeMap<(usize, usize), f64>,
}

impl DiGraph {
    /// Empty graph on `n` nodes.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParam("graph needs at least one node".into()));
        }
        Ok(Self {
            n,
            weights: BTreeMap::new(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(i, j, w) in edges {
            g.add_edge(i, j, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, tail: usize, head: usize, weight: f64) -> Result<()> {
        self.check_node(tail)?;
        self.check_node(head)?;
        if tail == head {
            return Err(Error::SelfLoop(tail));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::NonpositiveWeight(weight));
        }
        if self.weights.insert((tail, head), weight).is_some() {
            return Err(Error::DuplicateEdge(tail, head));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// `a_ij`, zero when there is no edge.
    pub fn weight(&self, tail: usize, head: usize) -> f64 {
        self.weights.get(&(tail, head)).copied().unwrap_or(0.0)
    }

    /// Edges as `(tail, head, weight)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn out_edges(&self, tail: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.weights
            .range((tail, 1)..=(tail, self.n))
            .map(|(&(_, j), &w)| (j, w))
    }

    pub fn out_degree(&self, node: usize) -> f64 {
        self.out_edges(node).map(|(_, w)| w).sum()
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.n {
            Err(Error::IndexOutOfRange {
                index: node,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn adjacency(&self) -> RealMatrix {
        let mut a = RealMatrix::zeros(self.n, self.n);
        for (i, j, w) in self.edges() {
            a[(i - 1, j - 1)] = w;
        }
        a
    }

    /// `L = D - A`, with `D` the diagonal of out-degrees. Row sums are zero.
    pub fn laplacian(&self) -> RealMatrix {
        let mut l = RealMatrix::zeros(self.n, self.n);
        for (i, j, w) in self.edges() {
            l[(i - 1, j - 1)] -= w;
            l[(i - 1, i - 1)] += w;
        }
        l
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges().all(|(i, j, w)| self.weight(j, i) == w)
    }

    /// Undirected graph with `A_u = (A + A^T) / 2`.
    pub fn symmetrize(&self) -> DiGraph {
        let mut weights = BTreeMap::new();
        for (i, j, w) in self.edges() {
            *weights.entry((i, j)).or_insert(0.0) += 0.5 * w;
            *weights.entry((j, i)).or_insert(0.0) += 0.5 * w;
        }
        DiGraph { n: self.n, weights }
    }

    /// Nodes reachable from `start` along edge directions, `start` included.
    /// Indexed 0-based (`result[v - 1]`).
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start - 1] = true;
        while let Some(u) = queue.pop_front() {
            for (v, _) in self.out_edges(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// True iff the graph has a globally reachable node.
    ///
    /// Equivalent to the condensation DAG having exactly one sink component.
    pub fn is_connected(&self) -> bool {
        let mut pg = PetGraph::<(), ()>::with_capacity(self.n, self.weights.len());
        let idx: Vec<NodeIndex> = (0..self.n).map(|_| pg.add_node(())).collect();
        for (i, j, _) in self.edges() {
            pg.add_edge(idx[i - 1], idx[j - 1], ());
        }
        let sccs = tarjan_scc(&pg);
        let mut component = vec![0usize; self.n];
        for (c, members) in sccs.iter().enumerate() {
            for v in members {
                component[v.index()] = c;
            }
        }
        let mut has_exit = vec![false; sccs.len()];
        for (i, j, _) in self.edges() {
            let (ci, cj) = (component[i - 1], component[j - 1]);
            if ci != cj {
                has_exit[ci] = true;
            }
        }
        has_exit.iter().filter(|&&e| !e).count() == 1
    }
}

/// Free-function form of [`DiGraph::laplacian`].
pub fn laplacian(g: &DiGraph) -> RealMatrix {
    g.laplacian()
}

pub fn is_connected(g: &DiGraph) -> bool {
    g.is_connected()
}

pub fn symmetrize(g: &DiGraph) -> DiGraph {
    g.symmetrize()
}

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

use super::DiGraph;

/// Shape of the subgraph that participates in connections between two nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConnectionClass {
    /// A single directed path containing both nodes, listed in edge order.
    Path { nodes: Vec<usize> },
    /// A single directed cycle through both nodes, listed in edge order
    /// starting at the first queried node.
    Cycle { nodes: Vec<usize> },
    /// Unit-weight in-tree whose only leaves are the two nodes; `n` and `m`
    /// are the branch lengths from the first and second node to the node
    /// where the branches meet.
    TwoBranchUnitTree { n: u32, m: u32 },
    Other,
}

struct Participating {
    nodes: Vec<bool>,
    edges: Vec<(usize, usize, f64)>,
}

/// An edge `(u, v)` participates when `u` is reachable from `k` or `j` and
/// `v` reaches a node that both `k` and `j` reach.
fn participating(g: &DiGraph, k: usize, j: usize) -> Participating {
    let n = g.node_count();
    let from_k = g.reachable_from(k);
    let from_j = g.reachable_from(j);

    let mut reaches_common = vec![false; n];
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v, _) in g.edges() {
        reverse[v - 1].push(u);
    }
    let mut queue: VecDeque<usize> = (1..=n).filter(|&v| from_k[v - 1] && from_j[v - 1]).collect();
    for &v in &queue {
        reaches_common[v - 1] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &u in &reverse[v - 1] {
            if !reaches_common[u - 1] {
                reaches_common[u - 1] = true;
                queue.push_back(u);
            }
        }
    }

    let mut nodes = vec![false; n];
    nodes[k - 1] = true;
    nodes[j - 1] = true;
    let edges: Vec<_> = g
        .edges()
        .filter(|&(u, v, _)| (from_k[u - 1] || from_j[u - 1]) && reaches_common[v - 1])
        .collect();
    for &(u, v, _) in &edges {
        nodes[u - 1] = true;
        nodes[v - 1] = true;
    }
    Participating { nodes, edges }
}

/// Classifies the connection subgraph between `k` and `j`.
///
/// Only the canonical families are recognised; every other shape is
/// reported as [`ConnectionClass::Other`].
pub fn classify_connection(g: &DiGraph, k: usize, j: usize) -> Result<ConnectionClass> {
    g.check_node(k)?;
    g.check_node(j)?;
    if k == j {
        return Err(Error::InvalidParam("k and j must differ".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }

    let sub = participating(g, k, j);
    let n = g.node_count();
    let node_count = sub.nodes.iter().filter(|&&b| b).count();
    let mut succ = vec![None; n];
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for &(u, v, _) in &sub.edges {
        succ[u - 1] = Some(v);
        outdeg[u - 1] += 1;
        indeg[v - 1] += 1;
    }
    let members = || (1..=n).filter(|&v| sub.nodes[v - 1]);
    if members().any(|v| outdeg[v - 1] > 1) {
        return Ok(ConnectionClass::Other);
    }

    let walk = |start: usize, limit: usize| {
        let mut seq = vec![start];
        let mut cur = start;
        while let Some(next) = succ[cur - 1] {
            if seq.len() > limit || next == start {
                break;
            }
            seq.push(next);
            cur = next;
        }
        seq
    };

    if sub.edges.len() + 1 == node_count && members().all(|v| indeg[v - 1] <= 1) {
        let starts: Vec<usize> = members().filter(|&v| indeg[v - 1] == 0).collect();
        if let [start] = starts[..] {
            let seq = walk(start, node_count);
            if seq.len() == node_count {
                return Ok(ConnectionClass::Path { nodes: seq });
            }
        }
    }

    if sub.edges.len() == node_count && members().all(|v| indeg[v - 1] == 1) {
        let seq = walk(k, node_count);
        if seq.len() == node_count && succ[*seq.last().unwrap() - 1] == Some(k) {
            return Ok(ConnectionClass::Cycle { nodes: seq });
        }
    }

    let unit = sub.edges.iter().all(|&(_, _, w)| w == 1.0);
    let leaves: Vec<usize> = members().filter(|&v| indeg[v - 1] == 0).collect();
    if unit && sub.edges.len() + 1 == node_count && leaves.len() == 2 {
        let from_k = walk(k, node_count);
        let from_j = walk(j, node_count);
        if let Some(n_len) = from_k.iter().position(|v| from_j.contains(v)) {
            let meet = from_k[n_len];
            let m_len = from_j.iter().position(|&v| v == meet).unwrap();
            let mut covered = vec![false; n];
            for &v in from_k.iter().chain(&from_j) {
                covered[v - 1] = true;
            }
            if n_len >= 1 && m_len >= 1 && covered == sub.nodes {
                return Ok(ConnectionClass::TwoBranchUnitTree {
                    n: n_len as u32,
                    m: m_len as u32,
                });
            }
        }
    }

    Ok(ConnectionClass::Other)
}

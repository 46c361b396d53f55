//! Closed-form resistances for edges, paths, cycles and two-branch unit
//! trees, the tree recurrence, and a dispatcher that picks the right formula
//! for a node pair.
//!
//! Tree quantities are exact rationals; edge, path and cycle forms take
//! floating-point weights.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{classify_connection, families, ConnectionClass, DiGraph};
use crate::lyapunov::Pipeline;
use crate::rational::ExactRational as Q;
use crate::series::{recurrence_constant, tree_binomial_sum};

pub fn edge_resistance(w: f64) -> Result<f64> {
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::NonpositiveWeight(w));
    }
    Ok(2.0 / w)
}

/// Series law: `sum_i 2 / w_i`.
pub fn path_resistance(weights: &[f64]) -> Result<f64> {
    if weights.is_empty() {
        return Err(Error::EmptyPath);
    }
    weights.iter().map(|&w| edge_resistance(w)).sum()
}

/// Parallel law over the two paths of a cycle.
pub fn cycle_resistance(path1: &[f64], path2: &[f64]) -> Result<f64> {
    let r1 = path_resistance(path1)?;
    let r2 = path_resistance(path2)?;
    Ok(1.0 / (1.0 / r1 + 1.0 / r2))
}

/// `r(n, 1) = 2(n - 1) + 2^(2-n)`.
pub fn tree_r_n1(n: i64) -> Result<Q> {
    if n < 1 {
        return Err(Error::InvalidParam(format!("n must be at least 1, got {n}")));
    }
    Ok(Q::from_int(2 * (n - 1)) + Q::pow2(2 - n))
}

/// Branch lengths of a two-branch tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeParams {
    pub n: u32,
    pub m: u32,
}

impl TreeParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 && m == 0 {
            return Err(Error::InvalidParam("n + m must be at least 1".into()));
        }
        Ok(Self { n, m })
    }
}

/// Leaf-to-leaf resistance of the unit-weight two-branch tree:
///
/// ```text
/// r(n, m) = 2(n - m) + 2^(3-n-m) sum_{i=1}^{floor((m+1)/2)} i C(n+m+2, n+2i+1)
/// ```
///
/// With one branch empty the tree is a path and the value is twice the other
/// length.
pub fn tree_resistance(p: TreeParams) -> Q {
    let (n, m) = (i64::from(p.n), i64::from(p.m));
    if m == 0 {
        return Q::from_int(2 * n);
    }
    if n == 0 {
        return Q::from_int(2 * m);
    }
    Q::from_int(2 * (n - m)) + Q::pow2(3 - n - m) * tree_binomial_sum(n + m + 2, n, m)
}

/// Table of tree resistances keyed by `(n, l)`.
pub type TreeTable = BTreeMap<(u32, u32), Q>;

fn lookup(table: &TreeTable, a: i64, b: i64) -> Result<&Q> {
    table
        .get(&(a as u32, b as u32))
        .ok_or(Error::MissingPrior(a as u32, b as u32))
}

/// `r(n, l + 1)` from earlier entries of `table`:
///
/// ```text
/// r(n, l+1) = c(n, l)
///           + 1/(4N)     sum_{k=1}^{l} (4 - 2/N - 2^(k-l)) r(n, k)
///           - (N+1)/(2N) sum_{k=1}^{n} (1/N - 2^(k-n)) r(k, l)
///           - 1/(4N)     sum_{k=1}^{n} sum_{j=1}^{l} (2^(1+k-n) - 2^(j-l)) r(k, j)
/// ```
///
/// with `N = n + l + 1` and `c(n, l)` the resistance-free terms.
pub fn tree_recurrence(n: u32, ell: u32, table: &TreeTable) -> Result<Q> {
    if n < 1 || ell < 1 {
        return Err(Error::InvalidParam(format!("n and l must be at least 1, got ({n}, {ell})")));
    }
    let (n, l) = (i64::from(n), i64::from(ell));
    let big_n = n + l + 1;
    let mut v = recurrence_constant(n, l);

    let mut acc = Q::zero();
    for k in 1..=l {
        let coef = Q::from_int(4) - Q::ratio(2, big_n) - Q::pow2(k - l);
        acc += coef * lookup(table, n, k)?;
    }
    v += Q::ratio(1, 4 * big_n) * acc;

    let mut acc = Q::zero();
    for k in 1..=n {
        let coef = Q::ratio(1, big_n) - Q::pow2(k - n);
        acc += coef * lookup(table, k, l)?;
    }
    v -= Q::ratio(big_n + 1, 2 * big_n) * acc;

    let mut acc = Q::zero();
    for k in 1..=n {
        for j in 1..=l {
            let coef = Q::pow2(1 + k - n) - Q::pow2(j - l);
            acc += coef * lookup(table, k, j)?;
        }
    }
    v -= Q::ratio(1, 4 * big_n) * acc;
    Ok(v)
}

/// Builds `r(n, l)` for `1 <= n <= max_n`, `1 <= l <= max_l` by seeding the
/// first column with [`tree_r_n1`] and extending one column at a time.
pub fn recurrence_table(max_n: u32, max_l: u32) -> Result<TreeTable> {
    let mut table = TreeTable::new();
    for n in 1..=max_n {
        table.insert((n, 1), tree_r_n1(i64::from(n))?);
    }
    for l in 1..max_l {
        for n in 1..=max_n {
            let next = tree_recurrence(n, l, &table)?;
            table.insert((n, l + 1), next);
        }
    }
    Ok(table)
}

/// Excess over twice the branch difference, `r(m + d, m) = 2d + e(m, d)`:
///
/// ```text
/// e(m, d) = 2^(3-2m-d) sum_{i=1}^{floor((m+1)/2)} i C(2m+d+2, m+d+2i+1)
/// ```
pub fn tree_excess(m: i64, d: i64) -> Result<Q> {
    if m < 1 || d < 0 {
        return Err(Error::InvalidParam(format!("need m >= 1 and d >= 0, got ({m}, {d})")));
    }
    Ok(Q::pow2(3 - 2 * m - d) * tree_binomial_sum(2 * m + d + 2, m + d, m))
}

/// Upper bound on `e(m, d + 1)` in terms of `e(m, d)`.
pub fn tree_excess_bound(m: i64, d: i64) -> Result<Q> {
    Ok(Q::ratio(2 * m + d + 3, 2 * m + 2 * d + 4) * tree_excess(m, d)?)
}

/// `2(n + m) - 2nm / (n + m)`, as printed for the three-node star with edge
/// resistances `2n` and `2m`.
///
/// Kept for comparison only. It disagrees with the numerical pipeline on
/// every star, including `n = m = 1`; see [`star3_resistance_oracle`].
pub fn star3_resistance_printed(n: i64, m: i64) -> Result<Q> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParam(format!("need n, m >= 1, got ({n}, {m})")));
    }
    Ok(Q::from_int(2 * (n + m)) - Q::ratio(2 * n * m, n + m))
}

/// Pipeline resistance between the leaves of the three-node star with edge
/// weights `1/n` and `1/m`.
pub fn star3_resistance_oracle(n: i64, m: i64) -> Result<f64> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParam(format!("need n, m >= 1, got ({n}, {m})")));
    }
    let g = families::star3(1.0 / n as f64, 1.0 / m as f64);
    Pipeline::default().resistance(&g, 2, 3)
}

/// `2(n^2 + m^2) / (n + m)`, which reproduces [`star3_resistance_oracle`].
pub fn star3_resistance_observed(n: i64, m: i64) -> Result<Q> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParam(format!("need n, m >= 1, got ({n}, {m})")));
    }
    Ok(Q::ratio(2 * (n * n + m * m), n + m))
}

/// Which formula produced a dispatched resistance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    Path,
    Cycle,
    TwoBranchUnitTree,
    Numeric,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

fn edge_weights(g: &DiGraph, nodes: &[usize]) -> Vec<f64> {
    nodes.windows(2).map(|w| g.weight(w[0], w[1])).collect()
}

/// Resistance between `k` and `j`, from a closed form when the connection
/// subgraph is a path, cycle or two-branch unit tree, else from the pipeline.
pub fn dispatch_resistance(g: &DiGraph, k: usize, j: usize) -> Result<(f64, Method)> {
    dispatch_resistance_with(g, k, j, &Pipeline::default())
}

pub fn dispatch_resistance_with(g: &DiGraph, k: usize, j: usize, pipeline: &Pipeline) -> Result<(f64, Method)> {
    if k == j {
        g.check_node(k)?;
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        return Ok((0.0, Method::Numeric));
    }
    match classify_connection(g, k, j)? {
        ConnectionClass::Path { nodes } => {
            let pk = nodes.iter().position(|&v| v == k).expect("k on path");
            let pj = nodes.iter().position(|&v| v == j).expect("j on path");
            let (a, b) = (pk.min(pj), pk.max(pj));
            Ok((path_resistance(&edge_weights(g, &nodes[a..=b]))?, Method::Path))
        }
        ConnectionClass::Cycle { mut nodes } => {
            let pj = nodes.iter().position(|&v| v == j).expect("j on cycle");
            let first = edge_weights(g, &nodes[..=pj]);
            nodes.push(k);
            let second = edge_weights(g, &nodes[pj..]);
            Ok((cycle_resistance(&first, &second)?, Method::Cycle))
        }
        ConnectionClass::TwoBranchUnitTree { n, m } => {
            let r = tree_resistance(TreeParams::new(n, m)?);
            Ok((r.to_f64(), Method::TwoBranchUnitTree))
        }
        ConnectionClass::Other => Ok((pipeline.resistance(g, k, j)?, Method::Numeric)),
    }
}

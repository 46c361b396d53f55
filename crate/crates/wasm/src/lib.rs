//! Browser bindings for the demo page in `www/`.
//!
//! Each export returns a JSON string. The logic lives in plain functions so
//! it can be tested natively.

use dirres::closed_forms::{dispatch_resistance, tree_excess, tree_excess_bound, tree_resistance};
use dirres::{DiGraph, Pipeline, TreeParams};
use serde::Serialize;
use wasm_bindgen::prelude::*;

pub const MAX_GRID: u32 = 40;
pub const MAX_NODES: usize = 30;
pub const MAX_EXCESS_D: i64 = 200;

#[derive(Serialize)]
struct TreeGrid {
    size: u32,
    /// `values[n][m]` for `0 <= n, m <= size`; `None` at `(0, 0)`.
    values: Vec<Vec<Option<f64>>>,
    exact: Vec<Vec<Option<String>>>,
}

pub fn tree_grid_json(size: u32) -> Result<String, String> {
    if size == 0 || size > MAX_GRID {
        return Err(format!("grid size must be in 1..={MAX_GRID}"));
    }
    let mut values = Vec::new();
    let mut exact = Vec::new();
    for n in 0..=size {
        let (mut row, mut row_exact) = (Vec::new(), Vec::new());
        for m in 0..=size {
            match TreeParams::new(n, m) {
                Ok(p) => {
                    let r = tree_resistance(p);
                    row.push(Some(r.to_f64()));
                    row_exact.push(Some(r.to_string()));
                }
                Err(_) => {
                    row.push(None);
                    row_exact.push(None);
                }
            }
        }
        values.push(row);
        exact.push(row_exact);
    }
    to_json(&TreeGrid { size, values, exact })
}

#[derive(Serialize)]
struct PairValue {
    k: usize,
    j: usize,
    value: f64,
    method: String,
}

#[derive(Serialize)]
struct GraphResistance {
    nodes: usize,
    edges: usize,
    /// Full matrix from the numerical pipeline, row-major.
    matrix: Vec<Vec<f64>>,
    pair: Option<PairValue>,
}

/// Parses an edge list and returns the resistance matrix. When `k` and `j`
/// are both nonzero the pair is also routed through the closed forms.
pub fn resistance_json(edge_list: &str, k: usize, j: usize) -> Result<String, String> {
    let g = DiGraph::parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let n = g.node_count();
    if n > MAX_NODES {
        return Err(format!("at most {MAX_NODES} nodes in the demo"));
    }
    let r = Pipeline::default().resistance_matrix(&g).map_err(|e| e.to_string())?;
    let matrix = (0..n).map(|a| (0..n).map(|b| r.matrix()[(a, b)]).collect()).collect();
    let pair = if k != 0 && j != 0 {
        let (value, method) = dispatch_resistance(&g, k, j).map_err(|e| e.to_string())?;
        Some(PairValue {
            k,
            j,
            value,
            method: method.to_string(),
        })
    } else {
        None
    };
    to_json(&GraphResistance {
        nodes: n,
        edges: g.edge_count(),
        matrix,
        pair,
    })
}

#[derive(Serialize)]
struct ExcessCurve {
    m: i64,
    d: Vec<i64>,
    excess: Vec<f64>,
    /// Bound on the next value, from the current one.
    bound_next: Vec<f64>,
}

pub fn excess_json(m: i64, max_d: i64) -> Result<String, String> {
    if m < 1 || !(0..=MAX_EXCESS_D).contains(&max_d) {
        return Err(format!("need m >= 1 and 0 <= max_d <= {MAX_EXCESS_D}"));
    }
    let mut curve = ExcessCurve {
        m,
        d: Vec::new(),
        excess: Vec::new(),
        bound_next: Vec::new(),
    };
    for d in 0..=max_d {
        curve.d.push(d);
        curve.excess.push(tree_excess(m, d).map_err(|e| e.to_string())?.to_f64());
        curve.bound_next.push(tree_excess_bound(m, d).map_err(|e| e.to_string())?.to_f64());
    }
    to_json(&curve)
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn tree_grid(size: u32) -> Result<String, JsError> {
    tree_grid_json(size).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn resistance(edge_list: &str, k: usize, j: usize) -> Result<String, JsError> {
    resistance_json(edge_list, k, j).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn excess_curve(m: i32, max_d: i32) -> Result<String, JsError> {
    excess_json(m.into(), max_d.into()).map_err(|e| JsError::new(&e))
}

//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! nodes 4          (optional, must precede the first edge)
//! 2 1 1.0          tail head weight, 1-based
//! ```
//!
//! Without a `nodes` header the node count is the largest index seen.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::DiGraph;

impl DiGraph {
    pub fn parse_edge_list(text: &str) -> Result<DiGraph> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, f64, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "nodes" {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err("`nodes` header must come first".into()));
                }
                let [_, count] = fields[..] else {
                    return Err(err("expected `nodes <N>`".into()));
                };
                let n: usize = count.parse().map_err(|_| err(format!("bad node count `{count}`")))?;
                if n == 0 {
                    return Err(err("node count must be positive".into()));
                }
                declared = Some(n);
                continue;
            }
            let [tail, head, weight] = fields[..] else {
                return Err(err(format!("expected `<tail> <head> <weight>`, got `{line}`")));
            };
            let node = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v),
                    _ => Err(err(format!("bad node index `{s}`"))),
                }
            };
            let w: f64 = weight.parse().map_err(|_| err(format!("bad weight `{weight}`")))?;
            edges.push((node(tail)?, node(head)?, w, line_no));
        }

        let seen_max = edges.iter().map(|&(t, h, _, _)| t.max(h)).max().unwrap_or(0);
        let n = match declared {
            Some(n) => n,
            None if seen_max == 0 => return Err(Error::Parse { line: 0, msg: "no edges and no `nodes` header".into() }),
            None => seen_max,
        };
        let mut g = DiGraph::new(n)?;
        for (t, h, w, line) in edges {
            g.add_edge(t, h, w).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("nodes {}\n", self.node_count());
        for (i, j, w) in self.edges() {
            let _ = writeln!(out, "{i} {j} {w}");
        }
        out
    }
}

impl FromStr for DiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DiGraph::parse_edge_list(s)
    }
}

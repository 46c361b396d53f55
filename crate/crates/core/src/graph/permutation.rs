use crate::error::{Error, Result};
use crate::RealMatrix;

use super::DiGraph;

/// A permutation matrix stored as one column index per row (0-based):
/// `P[(r, cols[r])] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    cols: Vec<usize>,
}

impl Permutation {
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        let n = cols.len();
        let mut seen = vec![false; n];
        for &c in &cols {
            if c >= n || std::mem::replace(&mut seen[c], true) {
                return Err(Error::MalformedInput(format!("{cols:?} is not a bijection")));
            }
        }
        Ok(Self { cols })
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.cols
    }

    /// Permutation whose matrix is `P^T`.
    pub fn transpose(&self) -> Self {
        let mut inv = vec![0; self.cols.len()];
        for (r, &c) in self.cols.iter().enumerate() {
            inv[c] = r;
        }
        Self { cols: inv }
    }

    pub fn to_matrix(&self) -> RealMatrix {
        let n = self.cols.len();
        let mut p = RealMatrix::zeros(n, n);
        for (r, &c) in self.cols.iter().enumerate() {
            p[(r, c)] = 1.0;
        }
        p
    }
}

/// Finds `P` with `D = AP` (`D` the out-degree diagonal), if one exists.
///
/// `AP` is diagonal exactly when every node has at most one outgoing edge and
/// distinct nodes point at distinct heads. Row `head(i)` of `P` then holds its
/// 1 in column `i`. Nodes without an outgoing edge take the remaining rows in
/// increasing order, smallest free row first.
pub fn find_degree_permutation(g: &DiGraph) -> Option<Permutation> {
    let n = g.node_count();
    let mut cols = vec![usize::MAX; n];
    let mut sinks = Vec::new();
    for i in 1..=n {
        let mut out = g.out_edges(i);
        match (out.next(), out.next()) {
            (None, _) => sinks.push(i - 1),
            (Some((head, _)), None) => {
                if cols[head - 1] != usize::MAX {
                    return None;
                }
                cols[head - 1] = i - 1;
            }
            (Some(_), Some(_)) => return None,
        }
    }
    let free_rows = (0..n).filter(|&r| cols[r] == usize::MAX).collect::<Vec<_>>();
    debug_assert_eq!(free_rows.len(), sinks.len());
    for (r, c) in free_rows.into_iter().zip(sinks) {
        cols[r] = c;
    }
    Some(Permutation { cols })
}

#[cfg(test)]
mod tests {
    use super::super::families;
    use super::*;

    fn cyclic_shift(n: usize) -> RealMatrix {
        let mut p = RealMatrix::zeros(n, n);
        for r in 0..n - 1 {
            p[(r, r + 1)] = 1.0;
        }
        p[(n - 1, 0)] = 1.0;
        p
    }

    #[test]
    fn path_gives_cyclic_shift() {
        let g = families::unit_path(3);
        let p = find_degree_permutation(&g).unwrap();
        assert_eq!(p.to_matrix(), cyclic_shift(3));
    }

    #[test]
    fn cycle_gives_cyclic_shift() {
        let g = families::directed_cycle(&[1.0, 2.0, 3.0]);
        let p = find_degree_permutation(&g).unwrap();
        assert_eq!(p.to_matrix(), cyclic_shift(3));
    }

    #[test]
    fn two_outgoing_edges_is_none() {
        let g = DiGraph::from_edges(3, &[(1, 2, 1.0), (1, 3, 1.0)]).unwrap();
        assert!(find_degree_permutation(&g).is_none());
    }

    #[test]
    fn shared_head_is_none() {
        let g = families::star3(1.0, 1.0);
        assert!(find_degree_permutation(&g).is_none());
    }

    #[test]
    fn ap_equals_d_on_found_permutations() {
        let graphs = [
            families::directed_path(&[0.3, 2.0, 5.0, 1.5]),
            families::directed_cycle(&[1.0, 0.2, 7.0, 3.0, 0.5]),
            DiGraph::from_edges(4, &[(1, 2, 2.0), (3, 4, 1.0)]).unwrap(),
            DiGraph::new(3).unwrap(),
        ];
        for g in &graphs {
            let p = find_degree_permutation(g).unwrap().to_matrix();
            let ap = g.adjacency() * p;
            let d = RealMatrix::from_diagonal(&g.laplacian().diagonal());
            assert_eq!(ap, d, "{g:?}");
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn transpose_is_matrix_transpose() {
        let p = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.transpose().to_matrix(), p.to_matrix().transpose());
    }
}

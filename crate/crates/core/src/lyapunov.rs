//! Numerical effective resistance through the reduced Laplacian.
//!
//! For a connected digraph with Laplacian `L` and a projection basis `Q`
//! (orthonormal rows spanning the complement of the all-ones vector):
//!
//! ```text
//! Lbar  = Q L Q^T
//! Lbar Sigma + Sigma Lbar^T = I
//! X     = 2 Q^T Sigma Q
//! r_kj  = x_kk + x_jj - 2 x_kj
//! ```
//!
//! The Lyapunov equation is solved by Kronecker vectorization and a dense LU
//! with partial pivoting. That is `O(N^6)` and meant for graphs of a few
//! dozen nodes.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::graph::DiGraph;
use crate::rational::ExactRational;
use crate::RealMatrix;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Pivots smaller than this fraction of the largest pivot mark the
/// vectorized system as singular.
const PIVOT_RATIO: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionBasis {
    q: RealMatrix,
}

impl ProjectionBasis {
    /// Helmert basis: row `i` is `(1, ..., 1, -i, 0, ..., 0) / sqrt(i(i+1))`
    /// with `i` leading ones.
    pub fn helmert(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize(n));
        }
        let mut q = RealMatrix::zeros(n - 1, n);
        for i in 1..n {
            let scale = ((i * (i + 1)) as f64).sqrt().recip();
            for c in 0..i {
                q[(i - 1, c)] = scale;
            }
            q[(i - 1, i)] = -(i as f64) * scale;
        }
        Ok(Self { q })
    }

    /// Accepts any `(N-1) x N` matrix satisfying `Q 1 = 0` and `Q Q^T = I`
    /// to within `tol`.
    pub fn from_matrix(q: RealMatrix, tol: f64) -> Result<Self> {
        let n = q.ncols();
        if n < 2 || q.nrows() != n - 1 {
            return Err(Error::DimensionMismatch {
                expected: "(N-1) x N".into(),
                got: format!("{} x {}", q.nrows(), n),
            });
        }
        let basis = Self { q };
        let (ones, orth, _) = basis.invariant_errors();
        if ones > tol || orth > tol {
            return Err(Error::MalformedInput(format!(
                "not a projection basis: |Q1| = {ones:e}, |QQ^T - I| = {orth:e}"
            )));
        }
        Ok(basis)
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.q
    }

    pub fn node_count(&self) -> usize {
        self.q.ncols()
    }

    /// Max-norm violations of `Q 1 = 0`, `Q Q^T = I` and `Q^T Q = Pi`.
    pub fn invariant_errors(&self) -> (f64, f64, f64) {
        let n = self.node_count();
        let ones = (&self.q * DVector::from_element(n, 1.0)).amax();
        let orth = (&self.q * self.q.transpose() - RealMatrix::identity(n - 1, n - 1)).amax();
        let proj = (self.q.transpose() * &self.q - centering(n)).amax();
        (ones, orth, proj)
    }

    /// `Q M Q^T`.
    pub fn reduce(&self, m: &RealMatrix) -> Result<RealMatrix> {
        let n = self.node_count();
        if m.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                expected: format!("{n} x {n}"),
                got: format!("{} x {}", m.nrows(), m.ncols()),
            });
        }
        Ok(&self.q * m * self.q.transpose())
    }
}

/// `Pi = I - (1/N) 1 1^T`.
pub fn centering(n: usize) -> RealMatrix {
    RealMatrix::identity(n, n) - RealMatrix::from_element(n, n, 1.0 / n as f64)
}

pub fn build_q(n: usize) -> Result<ProjectionBasis> {
    ProjectionBasis::helmert(n)
}

pub fn reduced_laplacian(l: &RealMatrix, q: &ProjectionBasis) -> Result<RealMatrix> {
    q.reduce(l)
}

/// Max-norm of `Lbar Sigma + Sigma Lbar^T - I`.
pub fn lyapunov_residual(lbar: &RealMatrix, sigma: &RealMatrix) -> f64 {
    let m = lbar.nrows();
    (lbar * sigma + sigma * lbar.transpose() - RealMatrix::identity(m, m)).amax()
}

/// Unique symmetric `Sigma` with `Lbar Sigma + Sigma Lbar^T = I`, checked
/// against [`DEFAULT_TOL`].
pub fn solve_sigma(lbar: &RealMatrix) -> Result<RealMatrix> {
    solve_sigma_with_tol(lbar, DEFAULT_TOL)
}

pub fn solve_sigma_with_tol(lbar: &RealMatrix, tol: f64) -> Result<RealMatrix> {
    let m = lbar.nrows();
    if lbar.ncols() != m || m == 0 {
        return Err(Error::DimensionMismatch {
            expected: "square, nonempty".into(),
            got: format!("{} x {}", lbar.nrows(), lbar.ncols()),
        });
    }
    let eye = RealMatrix::identity(m, m);
    // column-major vec: vec(L S) = (I ⊗ L) vec S, vec(S L^T) = (L ⊗ I) vec S
    let system = eye.kronecker(lbar) + lbar.kronecker(&eye);
    let lu = system.lu();
    let u = lu.u();
    let pivots = u.diagonal().map(f64::abs);
    let largest = pivots.max();
    if largest.is_nan() || largest <= 0.0 || pivots.min() <= PIVOT_RATIO * largest {
        return Err(Error::SingularSystem);
    }
    let rhs = DVector::from_column_slice(eye.as_slice());
    let v = lu.solve(&rhs).ok_or(Error::SingularSystem)?;
    let sigma = RealMatrix::from_column_slice(m, m, v.as_slice());
    let sigma = (&sigma + sigma.transpose()) * 0.5;

    let residual = lyapunov_residual(lbar, &sigma);
    if residual.is_nan() || tol.is_nan() || residual > tol {
        return Err(Error::ResidualTooLarge { residual, tol });
    }
    Ok(sigma)
}

/// `X = 2 Q^T Sigma Q`: symmetric, zero row and column sums.
#[derive(Clone, Debug, PartialEq)]
pub struct XMatrix(RealMatrix);

impl XMatrix {
    pub fn from_matrix(x: RealMatrix) -> Self {
        Self(x)
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn node_count(&self) -> usize {
        self.0.nrows()
    }

    /// `r_kj = x_kk + x_jj - 2 x_kj`, 1-based indices.
    pub fn resistance(&self, k: usize, j: usize) -> Result<f64> {
        let n = self.node_count();
        for idx in [k, j] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
        if k == j {
            return Ok(0.0);
        }
        let x = &self.0;
        Ok(x[(k - 1, k - 1)] + x[(j - 1, j - 1)] - 2.0 * x[(k - 1, j - 1)])
    }

    pub fn resistances(&self) -> ResistanceMatrix {
        let n = self.node_count();
        let x = &self.0;
        let r = RealMatrix::from_fn(n, n, |a, b| {
            if a == b {
                0.0
            } else {
                x[(a, a)] + x[(b, b)] - 2.0 * x[(a, b)]
            }
        });
        ResistanceMatrix(r)
    }
}

pub fn x_matrix(sigma: &RealMatrix, q: &ProjectionBasis) -> Result<XMatrix> {
    let m = q.node_count() - 1;
    if sigma.shape() != (m, m) {
        return Err(Error::DimensionMismatch {
            expected: format!("{m} x {m}"),
            got: format!("{} x {}", sigma.nrows(), sigma.ncols()),
        });
    }
    let x = q.matrix().transpose() * sigma * q.matrix() * 2.0;
    Ok(XMatrix((&x + x.transpose()) * 0.5))
}

pub fn resistance(x: &XMatrix, k: usize, j: usize) -> Result<f64> {
    x.resistance(k, j)
}

/// Pairwise effective resistances. Entry `(k-1, j-1)` holds `r_kj`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceMatrix(RealMatrix);

impl ResistanceMatrix {
    pub fn from_matrix(r: RealMatrix) -> Self {
        Self(r)
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn node_count(&self) -> usize {
        self.0.nrows()
    }

    /// `r_kj`, 1-based. Panics on out-of-range indices.
    pub fn get(&self, k: usize, j: usize) -> f64 {
        self.0[(k - 1, j - 1)]
    }

    pub fn max_asymmetry(&self) -> f64 {
        (&self.0 - self.0.transpose()).amax()
    }
}

/// Pipeline settings. The tolerance bounds the accepted Lyapunov residual.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pipeline {
    pub tol: f64,
}

impl Default for Pipeline {
    fn default() -> Self {
        Self { tol: DEFAULT_TOL }
    }
}

impl Pipeline {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol }
    }

    pub fn x_matrix_with_basis(&self, g: &DiGraph, q: &ProjectionBasis) -> Result<XMatrix> {
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let lbar = reduced_laplacian(&g.laplacian(), q)?;
        let sigma = solve_sigma_with_tol(&lbar, self.tol)?;
        x_matrix(&sigma, q)
    }

    pub fn x_matrix(&self, g: &DiGraph) -> Result<XMatrix> {
        let q = ProjectionBasis::helmert(g.node_count())?;
        self.x_matrix_with_basis(g, &q)
    }

    pub fn resistance_matrix(&self, g: &DiGraph) -> Result<ResistanceMatrix> {
        Ok(self.x_matrix(g)?.resistances())
    }

    pub fn resistance(&self, g: &DiGraph, k: usize, j: usize) -> Result<f64> {
        self.x_matrix(g)?.resistance(k, j)
    }
}

pub fn resistance_matrix(g: &DiGraph) -> Result<ResistanceMatrix> {
    Pipeline::default().resistance_matrix(g)
}

/// Rebuilds `X` from pairwise resistances:
///
/// ```text
/// x_kj = (1/2N) sum_i r_ki + (1/2N) sum_i r_ji - (1/N^2) sum_{i<l} r_il - r_kj / 2
/// ```
pub fn x_from_resistances(r: &ResistanceMatrix) -> Result<XMatrix> {
    let m = r.matrix();
    let n = m.nrows();
    if n != m.ncols() || n == 0 {
        return Err(Error::MalformedInput("resistance matrix must be square".into()));
    }
    let scale = m.amax().max(1.0);
    if r.max_asymmetry() > 1e-9 * scale {
        return Err(Error::MalformedInput("resistance matrix is not symmetric".into()));
    }
    if m.diagonal().amax() > 1e-9 * scale {
        return Err(Error::MalformedInput("resistance matrix has a nonzero diagonal".into()));
    }
    let nf = n as f64;
    let row_sums: Vec<f64> = (0..n).map(|k| m.row(k).sum()).collect();
    let upper: f64 = (0..n).flat_map(|i| (i + 1..n).map(move |l| (i, l))).map(|(i, l)| m[(i, l)]).sum();
    let x = RealMatrix::from_fn(n, n, |k, j| {
        (row_sums[k] + row_sums[j]) / (2.0 * nf) - upper / (nf * nf) - 0.5 * m[(k, j)]
    });
    Ok(XMatrix(x))
}

/// Exact `x_kj` for the unit-weight directed path on `n_nodes` nodes,
/// labelled root-first:
///
/// ```text
/// x_kj = (2N^2 + 3N + 1 + 3k^2 + 3j^2 - 3(N+1)k - 3(N+1)j) / (3N) - |k - j|
/// ```
pub fn x_path_entry(n_nodes: usize, k: usize, j: usize) -> Result<ExactRational> {
    for idx in [k, j] {
        if idx == 0 || idx > n_nodes {
            return Err(Error::IndexOutOfRange { index: idx, n: n_nodes });
        }
    }
    let (n, k, j) = (n_nodes as i64, k as i64, j as i64);
    let num = 2 * n * n + 3 * n + 1 + 3 * k * k + 3 * j * j - 3 * (n + 1) * k - 3 * (n + 1) * j;
    Ok(ExactRational::ratio(num, 3 * n) - ExactRational::from_int((k - j).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    const EPS: f64 = 1e-12;

    fn assert_close(a: &RealMatrix, b: &RealMatrix, tol: f64) {
        assert_eq!(a.shape(), b.shape());
        let d = (a - b).amax();
        assert!(d <= tol, "deviation {d:e}\n{a}\n{b}");
    }

    #[test]
    fn helmert_two_nodes() {
        let q = build_q(2).unwrap();
        let s = 0.5f64.sqrt();
        assert_close(q.matrix(), &RealMatrix::from_row_slice(1, 2, &[s, -s]), EPS);
    }

    #[test]
    fn helmert_three_nodes() {
        let q = build_q(3).unwrap();
        let (a, b) = (2f64.sqrt(), 6f64.sqrt());
        let expect = RealMatrix::from_row_slice(2, 3, &[1.0 / a, -1.0 / a, 0.0, 1.0 / b, 1.0 / b, -2.0 / b]);
        assert_close(q.matrix(), &expect, EPS);
        let (ones, orth, proj) = q.invariant_errors();
        assert!(ones <= EPS && orth <= EPS && proj <= EPS);
    }

    #[test]
    fn helmert_invariants_up_to_twelve() {
        for n in 2..=12 {
            let (ones, orth, proj) = build_q(n).unwrap().invariant_errors();
            assert!(ones <= EPS && orth <= EPS && proj <= EPS, "n={n}");
        }
        assert_eq!(build_q(1), Err(Error::InvalidSize(1)));
    }

    #[test]
    fn reduced_laplacian_examples() {
        let q2 = build_q(2).unwrap();
        let edge = DiGraph::from_edges(2, &[(2, 1, 1.0)]).unwrap();
        assert_close(&reduced_laplacian(&edge.laplacian(), &q2).unwrap(), &RealMatrix::from_element(1, 1, 1.0), EPS);

        let q3 = build_q(3).unwrap();
        assert_eq!(reduced_laplacian(&RealMatrix::zeros(3, 3), &q3).unwrap(), RealMatrix::zeros(2, 2));
        let star = families::star3(1.0, 1.0);
        assert_close(&reduced_laplacian(&star.laplacian(), &q3).unwrap(), &RealMatrix::identity(2, 2), EPS);

        assert!(matches!(reduced_laplacian(&RealMatrix::zeros(2, 2), &q3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn sigma_examples() {
        let s = solve_sigma(&RealMatrix::from_element(1, 1, 1.0)).unwrap();
        assert!((s[(0, 0)] - 0.5).abs() <= EPS);
        let s = solve_sigma(&RealMatrix::identity(2, 2)).unwrap();
        assert_close(&s, &(RealMatrix::identity(2, 2) * 0.5), EPS);
    }

    #[test]
    fn sigma_singular_for_disconnected() {
        let g = DiGraph::new(3).unwrap();
        let lbar = reduced_laplacian(&g.laplacian(), &build_q(3).unwrap()).unwrap();
        assert_eq!(solve_sigma(&lbar), Err(Error::SingularSystem));
        let two_sinks = DiGraph::from_edges(3, &[(2, 1, 1.0), (2, 3, 1.0)]).unwrap();
        let lbar = reduced_laplacian(&two_sinks.laplacian(), &build_q(3).unwrap()).unwrap();
        assert_eq!(solve_sigma(&lbar), Err(Error::SingularSystem));
    }

    #[test]
    fn sigma_rejects_nonsquare() {
        assert!(matches!(solve_sigma(&RealMatrix::zeros(2, 3)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn x_matrix_examples() {
        let q2 = build_q(2).unwrap();
        let x = x_matrix(&RealMatrix::from_element(1, 1, 0.5), &q2).unwrap();
        assert_close(x.matrix(), &RealMatrix::from_row_slice(2, 2, &[0.5, -0.5, -0.5, 0.5]), EPS);

        let q3 = build_q(3).unwrap();
        assert_eq!(x_matrix(&RealMatrix::zeros(2, 2), &q3).unwrap().matrix(), &RealMatrix::zeros(3, 3));
        let x = x_matrix(&(RealMatrix::identity(2, 2) * 0.5), &q3).unwrap();
        assert_close(x.matrix(), &centering(3), EPS);
    }

    #[test]
    fn resistance_examples() {
        let edge = DiGraph::from_edges(2, &[(2, 1, 1.0)]).unwrap();
        let x = Pipeline::default().x_matrix(&edge).unwrap();
        assert!((x.resistance(2, 1).unwrap() - 2.0).abs() <= EPS);
        assert_eq!(x.resistance(1, 1).unwrap(), 0.0);
        assert!(matches!(x.resistance(3, 1), Err(Error::IndexOutOfRange { .. })));

        let star = families::star3(1.0, 1.0);
        let r = resistance_matrix(&star).unwrap();
        assert!((r.get(2, 3) - 2.0).abs() <= 1e-10);
    }

    #[test]
    fn resistance_matrix_examples() {
        let edge = DiGraph::from_edges(2, &[(2, 1, 1.0)]).unwrap();
        let r = resistance_matrix(&edge).unwrap();
        assert_close(r.matrix(), &RealMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 0.0]), 1e-10);

        let path = families::unit_path(3);
        assert!((resistance_matrix(&path).unwrap().get(3, 1) - 4.0).abs() <= 1e-10);

        let cycle = families::directed_cycle(&[1.0; 3]);
        let r = resistance_matrix(&cycle).unwrap();
        assert!((r.get(1, 2) - 4.0 / 3.0).abs() <= 1e-10);

        assert_eq!(resistance_matrix(&DiGraph::new(2).unwrap()), Err(Error::NotConnected));
    }

    #[test]
    fn x_from_resistances_examples() {
        let r = ResistanceMatrix::from_matrix(RealMatrix::from_row_slice(2, 2, &[0.0, 2.0, 2.0, 0.0]));
        let x = x_from_resistances(&r).unwrap();
        assert_close(x.matrix(), &RealMatrix::from_row_slice(2, 2, &[0.5, -0.5, -0.5, 0.5]), EPS);

        let zero = ResistanceMatrix::from_matrix(RealMatrix::zeros(2, 2));
        assert_eq!(x_from_resistances(&zero).unwrap().matrix(), &RealMatrix::zeros(2, 2));

        let asym = ResistanceMatrix::from_matrix(RealMatrix::from_row_slice(2, 2, &[0.0, 2.0, 1.0, 0.0]));
        assert!(matches!(x_from_resistances(&asym), Err(Error::MalformedInput(_))));
        let diag = ResistanceMatrix::from_matrix(RealMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 0.0]));
        assert!(matches!(x_from_resistances(&diag), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn x_path_entry_examples() {
        assert_eq!(x_path_entry(2, 1, 1).unwrap(), ExactRational::ratio(1, 2));
        assert_eq!(x_path_entry(2, 1, 2).unwrap(), ExactRational::ratio(-1, 2));
        assert!(matches!(x_path_entry(3, 4, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn x_path_entry_matches_pipeline() {
        for n in 2..=10 {
            let x = Pipeline::default().x_matrix(&families::unit_path(n)).unwrap();
            for k in 1..=n {
                for j in 1..=n {
                    let exact = x_path_entry(n, k, j).unwrap().to_f64();
                    assert!((exact - x.matrix()[(k - 1, j - 1)]).abs() <= 1e-9, "N={n} ({k},{j})");
                }
            }
        }
    }
}

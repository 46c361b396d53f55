//! Effective resistance on directed graphs.
//!
//! The numerical route goes through a Lyapunov equation on the reduced
//! Laplacian ([`lyapunov`]). Closed forms for edges, paths, cycles and
//! two-branch unit trees live in [`closed_forms`], and the exact finite-series
//! identities they rest on in [`series`].
//!
//! ```
//! use dirres::{closed_forms, graph::families, Pipeline};
//!
//! let (g, k, j) = families::two_branch_tree(3, 1);
//! let numeric = Pipeline::default().resistance(&g, k, j).unwrap();
//! let exact = closed_forms::tree_resistance(closed_forms::TreeParams::new(3, 1).unwrap());
//! assert!((numeric - exact.to_f64()).abs() < 1e-9);
//! ```

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod lyapunov;
pub mod random;
pub mod rational;
pub mod series;
pub mod verify;

pub type RealMatrix = nalgebra::DMatrix<f64>;

pub use closed_forms::{dispatch_resistance, Method, TreeParams};
pub use error::{Error, Result};
pub use graph::{classify_connection, ConnectionClass, DiGraph, Permutation};
pub use lyapunov::{resistance_matrix, Pipeline, ProjectionBasis, ResistanceMatrix, XMatrix, DEFAULT_TOL};
pub use rational::ExactRational;
pub use series::IdentityId;

use dirres::graph::{families, find_degree_permutation, Permutation};
use dirres::lyapunov::{centering, x_from_resistances};
use dirres::random::GraphSampler;
use dirres::{DiGraph, Pipeline, ProjectionBasis, RealMatrix};
use nalgebra::linalg::QR;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn bar(q: &ProjectionBasis, m: &RealMatrix) -> RealMatrix {
    q.reduce(m).unwrap()
}

/// An orthonormal basis of the complement of the ones vector, drawn at
/// random and unrelated to the Helmert rows.
fn random_basis(n: usize, sampler: &mut GraphSampler) -> ProjectionBasis {
    let rng = sampler.rng();
    let m = RealMatrix::from_fn(n, n - 1, |_, _| rng.gen_range(-1.0..1.0));
    let projected = centering(n) * m;
    let q = QR::new(projected).q();
    ProjectionBasis::from_matrix(q.transpose(), 1e-10).unwrap()
}

fn random_permutation(n: usize, sampler: &mut GraphSampler) -> Permutation {
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(sampler.rng());
    Permutation::new(cols).unwrap()
}

fn is_diagonal(m: &RealMatrix) -> bool {
    (0..m.nrows()).all(|r| (0..m.ncols()).all(|c| r == c || m[(r, c)] == 0.0))
}

fn path_or_cycle(seed: u64) -> DiGraph {
    let mut s = GraphSampler::new(seed);
    let nodes = s.size(2, 12);
    if seed.is_multiple_of(2) || nodes < 3 {
        s.path(nodes)
    } else {
        s.cycle(nodes)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_rows_sum_to_zero(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3);
        let l = g.laplacian();
        for r in 0..n {
            prop_assert!(l.row(r).sum().abs() < 1e-12);
        }
    }

    #[test]
    fn symmetrize_is_symmetric(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3);
        let u = g.symmetrize();
        prop_assert!(u.is_symmetric());
        let a = u.adjacency();
        prop_assert!((&a - a.transpose()).amax() == 0.0);
        prop_assert!((a - (g.adjacency() + g.adjacency().transpose()) * 0.5).amax() < 1e-15);
    }

    #[test]
    fn permutation_basics(seed in any::<u64>(), n in 1usize..10) {
        let p = random_permutation(n, &mut GraphSampler::new(seed)).to_matrix();
        let pi = centering(n);
        let id = RealMatrix::identity(n, n);
        prop_assert!((p.transpose() - p.clone().try_inverse().unwrap()).amax() < 1e-12);
        prop_assert!((&p * &pi - &pi * &p).amax() < 1e-12);
        prop_assert!(((&p - &id) * &pi - (&p - &id)).amax() < 1e-12);
    }

    #[test]
    fn degree_permutation_gives_ap_equal_d(seed in any::<u64>()) {
        let g = path_or_cycle(seed);
        let p = find_degree_permutation(&g).expect("paths and cycles admit one").to_matrix();
        let a = g.adjacency();
        let d = RealMatrix::from_diagonal(&g.laplacian().diagonal());
        prop_assert!((&a * &p - d).amax() == 0.0);
    }

    #[test]
    fn diagonal_ap_consequences(seed in any::<u64>()) {
        let g = path_or_cycle(seed);
        let n = g.node_count();
        let p = find_degree_permutation(&g).unwrap().to_matrix();
        let a = g.adjacency();
        let id = RealMatrix::identity(n, n);
        let pm = &p - &id;
        let pmt = pm.transpose();

        prop_assert!(is_diagonal(&(&p * &a)));

        let lhs = &a * &pm + a.transpose() * &pmt;
        let rhs = &pm * &a + &pmt * a.transpose();
        prop_assert!((&lhs - lhs.transpose()).amax() < 1e-12);
        prop_assert!((lhs - rhs).amax() < 1e-12);

        let q = ProjectionBasis::helmert(n).unwrap();
        let (ab, pb) = (bar(&q, &a), bar(&q, &pm));
        let left = pb.transpose() * ab.transpose() * &ab * &pb;
        let right = &pb * &ab * ab.transpose() * pb.transpose();
        let scale = left.amax().max(1.0);
        prop_assert!((left - right).amax() < 1e-12 * scale);
    }

    #[test]
    fn x_independent_of_basis(seed in any::<u64>(), n in 2usize..11) {
        let mut s = GraphSampler::new(seed);
        let g = s.connected(n, 0.3);
        let q = random_basis(n, &mut s);
        let pipe = Pipeline::default();
        let x1 = pipe.x_matrix(&g).unwrap();
        let x2 = pipe.x_matrix_with_basis(&g, &q).unwrap();
        let scale = x1.matrix().amax().max(1.0);
        prop_assert!((x1.matrix() - x2.matrix()).amax() < 1e-9 * scale);
    }

    #[test]
    fn x_invariants(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3);
        let x = Pipeline::default().x_matrix(&g).unwrap();
        let m = x.matrix();
        let scale = m.amax().max(1.0);
        prop_assert!((m - m.transpose()).amax() == 0.0);
        for r in 0..n {
            prop_assert!(m.row(r).sum().abs() < 1e-9 * scale);
        }
        let eig = m.clone().symmetric_eigenvalues();
        let mut sorted: Vec<f64> = eig.iter().copied().collect();
        sorted.sort_by(f64::total_cmp);
        prop_assert!(sorted[0].abs() < 1e-9 * scale);
        prop_assert!(sorted[1] > 1e-9 * scale);
    }

    #[test]
    fn x_resistance_roundtrip(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3);
        let x = Pipeline::default().x_matrix(&g).unwrap();
        let back = x_from_resistances(&x.resistances()).unwrap();
        let scale = x.matrix().amax().max(1.0);
        prop_assert!((back.matrix() - x.matrix()).amax() < 1e-9 * scale);
    }

    #[test]
    fn metric_axioms(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3);
        let r = Pipeline::default().resistance_matrix(&g).unwrap();
        let m = r.matrix();
        let scale = m.amax();
        prop_assert!(r.max_asymmetry() < 1e-10 * scale.max(1.0));
        for i in 0..n {
            prop_assert_eq!(m[(i, i)], 0.0);
            for j in (0..n).filter(|&j| j != i) {
                prop_assert!(m[(i, j)] > 0.0);
                for k in 0..n {
                    let (ij, ik, kj) = (m[(i, j)].sqrt(), m[(i, k)].sqrt(), m[(k, j)].sqrt());
                    prop_assert!(ij <= ik + kj + 1e-9 * scale.sqrt());
                }
            }
        }
    }

    #[test]
    fn undirected_triangle_inequality(seed in any::<u64>(), n in 2usize..9) {
        let g = GraphSampler::new(seed).connected(n, 0.3).symmetrize();
        let m = Pipeline::default().resistance_matrix(&g).unwrap().matrix().clone();
        let scale = m.amax();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    prop_assert!(m[(i, j)] <= m[(i, k)] + m[(k, j)] + 1e-9 * scale);
                }
            }
        }
    }

    #[test]
    fn symmetrized_paths_and_cycles_keep_resistances(seed in any::<u64>()) {
        let g = path_or_cycle(seed);
        let pipe = Pipeline::default();
        let directed = pipe.resistance_matrix(&g).unwrap();
        let undirected = pipe.resistance_matrix(&g.symmetrize()).unwrap();
        let scale = directed.matrix().amax().max(1.0);
        prop_assert!((directed.matrix() - undirected.matrix()).amax() < 1e-9 * scale);
    }
}

#[test]
fn canonical_families_classify_as_constructed() {
    use dirres::ConnectionClass;

    for nodes in 2..=8 {
        let g = families::unit_path(nodes);
        assert_eq!(
            dirres::classify_connection(&g, nodes, 1).unwrap(),
            ConnectionClass::Path { nodes: (1..=nodes).rev().collect() }
        );
    }
    for nodes in 3..=8 {
        let g = families::directed_cycle(&vec![1.0; nodes]);
        for k in 1..=nodes {
            for j in (1..=nodes).filter(|&j| j != k) {
                assert!(matches!(
                    dirres::classify_connection(&g, k, j).unwrap(),
                    ConnectionClass::Cycle { .. }
                ));
            }
        }
    }
    for n in 1..=6u32 {
        for m in 1..=6u32 {
            let (g, k, j) = families::two_branch_tree(n as usize, m as usize);
            assert_eq!(
                dirres::classify_connection(&g, k, j).unwrap(),
                ConnectionClass::TwoBranchUnitTree { n, m }
            );
        }
    }
    assert_eq!(
        dirres::classify_connection(&families::star3(1.0, 1.0), 2, 3).unwrap(),
        ConnectionClass::TwoBranchUnitTree { n: 1, m: 1 }
    );
}

/// The degree-permutation hypothesis is not limited to paths and cycles:
/// disjoint pieces with at most one out-edge per node also qualify, but only
/// connected ones matter for resistance.
#[test]
fn degree_permutation_probe() {
    let mut s = GraphSampler::new(11);
    let mut connected_hits = 0;
    for _ in 0..2000 {
        let n = s.size(3, 6);
        let g = s.connected(n, 0.35);
        if find_degree_permutation(&g).is_some() {
            connected_hits += 1;
            let every_node_one_out = (1..=n).filter(|&i| g.out_edges(i).count() == 1).count();
            assert!(every_node_one_out >= n - 1);
        }
    }
    assert!(connected_hits > 0);
}

/// On directed graphs the resistance itself need not satisfy the triangle
/// inequality; its square root does.
#[test]
fn directed_triangle_counterexample() {
    let g = DiGraph::from_edges(
        3,
        &[
            (1, 2, 8.368698656706842),
            (1, 3, 2.745635523474084),
            (2, 1, 4.51898957375227),
            (3, 1, 1.3093453606130163),
        ],
    )
    .unwrap();
    let r = Pipeline::default().resistance_matrix(&g).unwrap();
    let (r12, r13, r23) = (r.get(1, 2), r.get(1, 3), r.get(2, 3));
    assert!((r12 - 0.16983922704701437).abs() < 1e-9);
    assert!((r13 - 0.635161862702025).abs() < 1e-9);
    assert!((r23 - 0.942553948363824).abs() < 1e-9);
    assert!(r23 > r12 + r13);
    assert!(r23.sqrt() <= r12.sqrt() + r13.sqrt());
}

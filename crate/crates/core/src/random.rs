//! Seeded random graphs for verification sweeps.

use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{families, DiGraph};

pub const WEIGHT_MIN: f64 = 0.1;
pub const WEIGHT_MAX: f64 = 10.0;

/// Deterministic generator; weights are uniform in `[0.1, 10]`.
pub struct GraphSampler {
    rng: ChaCha8Rng,
    weights: Uniform<f64>,
}

impl GraphSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            weights: Uniform::new_inclusive(WEIGHT_MIN, WEIGHT_MAX),
        }
    }

    pub fn weight(&mut self) -> f64 {
        self.weights.sample(&mut self.rng)
    }

    pub fn weights(&mut self, len: usize) -> Vec<f64> {
        (0..len).map(|_| self.weight()).collect()
    }

    pub fn size(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// Weighted directed path on `nodes` nodes.
    pub fn path(&mut self, nodes: usize) -> DiGraph {
        let w = self.weights(nodes - 1);
        families::directed_path(&w)
    }

    /// Weighted directed cycle on `nodes` nodes.
    pub fn cycle(&mut self, nodes: usize) -> DiGraph {
        let w = self.weights(nodes);
        families::directed_cycle(&w)
    }

    /// Connected digraph on `n` nodes. Each ordered pair carries an edge with
    /// probability `density`; draws are repeated until the graph is connected.
    pub fn connected(&mut self, n: usize, density: f64) -> DiGraph {
        loop {
            let mut g = DiGraph::new(n).expect("n >= 1");
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    if self.rng.gen_bool(density) {
                        let w = self.weight();
                        g.add_edge(i, j, w).expect("fresh edge");
                    }
                }
            }
            if g.is_connected() {
                return g;
            }
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = GraphSampler::new(7).connected(6, 0.3);
        let b = GraphSampler::new(7).connected(6, 0.3);
        assert_eq!(a, b);
    }

    #[test]
    fn weights_in_range() {
        let mut s = GraphSampler::new(1);
        assert!(s.weights(1000).iter().all(|w| (WEIGHT_MIN..=WEIGHT_MAX).contains(w)));
    }

    #[test]
    fn connected_is_connected() {
        let mut s = GraphSampler::new(3);
        for n in 2..=8 {
            assert!(s.connected(n, 0.25).is_connected());
        }
    }
}

//! Verification sweeps shared by the command-line tool and the test suites.

use serde::Serialize;

use crate::closed_forms::{dispatch_resistance_with, tree_resistance, Method, TreeParams};
use crate::error::Result;
use crate::graph::families;
use crate::lyapunov::Pipeline;
use crate::random::GraphSampler;
use crate::series::{eval_identity, g_expression, h_expression, s_expression, sweep_grid, IdentityId, SweepBounds};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClosedFormConfig {
    /// Largest tree branch length.
    pub max_n: u32,
    /// Largest node count for random paths and cycles.
    pub max_cycle: usize,
    /// Random instances per family.
    pub instances: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for ClosedFormConfig {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_cycle: 12,
            instances: 50,
            seed: 0,
            tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyCheck {
    pub family: &'static str,
    /// Node pairs compared.
    pub cases: usize,
    /// Largest `|closed form - pipeline|`.
    pub max_deviation: f64,
    /// Pairs where dispatch did not pick the family's closed form.
    pub misrouted: usize,
    pub pass: bool,
}

struct Acc {
    cases: usize,
    max_deviation: f64,
    misrouted: usize,
}

impl Acc {
    fn new() -> Self {
        Self { cases: 0, max_deviation: 0.0, misrouted: 0 }
    }

    fn finish(self, family: &'static str, tol: f64) -> FamilyCheck {
        FamilyCheck {
            family,
            cases: self.cases,
            max_deviation: self.max_deviation,
            misrouted: self.misrouted,
            pass: self.misrouted == 0 && self.max_deviation <= tol,
        }
    }
}

fn compare_all_pairs(g: &crate::DiGraph, method: Method, pipe: &Pipeline, acc: &mut Acc) -> Result<()> {
    let r = pipe.resistance_matrix(g)?;
    let n = g.node_count();
    for k in 1..=n {
        for j in (1..=n).filter(|&j| j != k) {
            let (value, used) = dispatch_resistance_with(g, k, j, pipe)?;
            acc.cases += 1;
            if used != method {
                acc.misrouted += 1;
            }
            acc.max_deviation = acc.max_deviation.max((value - r.get(k, j)).abs());
        }
    }
    Ok(())
}

/// Random weighted paths and cycles (every ordered pair) and the unit tree
/// grid (leaf pair), each closed form against the pipeline.
pub fn closed_forms(cfg: &ClosedFormConfig) -> Result<Vec<FamilyCheck>> {
    let pipe = Pipeline::with_tol(cfg.tol.max(crate::lyapunov::DEFAULT_TOL));
    let mut sampler = GraphSampler::new(cfg.seed);
    let max_nodes = cfg.max_cycle.max(2);

    let mut paths = Acc::new();
    let mut cycles = Acc::new();
    for _ in 0..cfg.instances {
        let nodes = sampler.size(2, max_nodes);
        compare_all_pairs(&sampler.path(nodes), Method::Path, &pipe, &mut paths)?;
        let nodes = sampler.size(2, max_nodes);
        compare_all_pairs(&sampler.cycle(nodes), Method::Cycle, &pipe, &mut cycles)?;
    }

    let mut trees = Acc::new();
    for n in 1..=cfg.max_n {
        for m in 1..=cfg.max_n {
            let (g, k, j) = families::two_branch_tree(n as usize, m as usize);
            let numeric = pipe.resistance(&g, k, j)?;
            let exact = tree_resistance(TreeParams::new(n, m)?).to_f64();
            trees.cases += 1;
            trees.max_deviation = trees.max_deviation.max((numeric - exact).abs());
        }
    }

    Ok(vec![
        paths.finish("path", cfg.tol),
        cycles.finish("cycle", cfg.tol),
        trees.finish("tree", cfg.tol),
    ])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    /// Identity name, or `g`, `h`, `s` for the derivation expressions.
    pub id: String,
    pub family: &'static str,
    pub cases: usize,
    /// Up to [`MAX_REPORTED_FAILURES`] offending parameter tuples.
    pub failures: Vec<Vec<i64>>,
    pub failure_count: usize,
    pub pass: bool,
}

pub const MAX_REPORTED_FAILURES: usize = 10;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IdentitySweep {
    pub bounds: SweepBounds,
    /// Restrict to these identities; empty means all of them plus the
    /// derivation expressions.
    pub only: Vec<IdentityId>,
    /// Adds one to the right side of this identity, to exercise failure
    /// reporting.
    pub perturb: Option<IdentityId>,
}

fn check<I, F>(id: String, family: &'static str, grid: I, mut holds: F) -> Result<IdentityCheck>
where
    I: IntoIterator<Item = Vec<i64>>,
    F: FnMut(&[i64]) -> Result<bool>,
{
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut failure_count = 0;
    for params in grid {
        cases += 1;
        if !holds(&params)? {
            failure_count += 1;
            if failures.len() < MAX_REPORTED_FAILURES {
                failures.push(params);
            }
        }
    }
    Ok(IdentityCheck {
        id,
        family,
        cases,
        failures,
        failure_count,
        pass: failure_count == 0,
    })
}

pub fn identities(sweep: &IdentitySweep) -> Result<Vec<IdentityCheck>> {
    let ids: Vec<IdentityId> = if sweep.only.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        sweep.only.clone()
    };
    let mut out = Vec::new();
    for id in ids {
        let grid = sweep_grid(id, &sweep.bounds);
        out.push(check(id.to_string(), id.family(), grid, |p| {
            let mut e = eval_identity(id, p)?;
            if sweep.perturb == Some(id) {
                e.rhs += crate::ExactRational::one();
            }
            Ok(e.holds())
        })?);
    }
    if sweep.only.is_empty() {
        let b = &sweep.bounds;
        let gh_grid = || (0..=b.gh_n).flat_map(|n| (0..=b.gh_p).map(move |p| vec![n, p]));
        out.push(check("g".into(), "derivation expressions", gh_grid(), |p| {
            Ok(g_expression(p[0], p[1]).is_zero())
        })?);
        out.push(check("h".into(), "derivation expressions", gh_grid(), |p| {
            Ok(h_expression(p[0], p[1]).is_zero())
        })?);
        let s_grid = (1..=b.s_max).flat_map(|n| (1..=b.s_max).map(move |l| vec![n, l]));
        out.push(check("s".into(), "derivation expressions", s_grid, |p| {
            let s = s_expression(p[0], p[1])?;
            Ok(s.definition == s.simplified)
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_closed_form_sweep_passes() {
        let cfg = ClosedFormConfig {
            max_n: 3,
            max_cycle: 6,
            instances: 5,
            ..Default::default()
        };
        let report = closed_forms(&cfg).unwrap();
        assert_eq!(report.len(), 3);
        assert!(report.iter().all(|f| f.pass), "{report:?}");
        assert_eq!(report[2].cases, 9);
    }

    #[test]
    fn zero_tolerance_fails() {
        let cfg = ClosedFormConfig {
            max_n: 3,
            max_cycle: 6,
            instances: 5,
            tol: 0.0,
            ..Default::default()
        };
        let report = closed_forms(&cfg).unwrap();
        assert!(report.iter().any(|f| !f.pass && f.max_deviation > 0.0));
    }

    #[test]
    fn perturbation_is_reported() {
        let sweep = IdentitySweep {
            only: vec![IdentityId::SumTwos],
            perturb: Some(IdentityId::SumTwos),
            ..Default::default()
        };
        let report = identities(&sweep).unwrap();
        assert_eq!(report.len(), 1);
        assert!(!report[0].pass);
        assert_eq!(report[0].failure_count, 40);
        assert_eq!(report[0].failures[0], vec![1]);
    }
}

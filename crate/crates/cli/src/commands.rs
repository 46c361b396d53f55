use std::fmt;
use std::path::Path;

use dirres::closed_forms::{
    dispatch_resistance_with, recurrence_table, star3_resistance_observed, star3_resistance_oracle,
    star3_resistance_printed, tree_r_n1, tree_resistance,
};
use dirres::graph::families;
use dirres::verify::{self, ClosedFormConfig, IdentitySweep};
use dirres::{DiGraph, Error, IdentityId, Pipeline, TreeParams};
use serde_json::json;

use crate::report::{Record, Report, Status};

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NOT_CONNECTED: u8 = 3;
pub const EXIT_NUMERIC: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotConnected => EXIT_NOT_CONNECTED,
            Error::SingularSystem | Error::ResidualTooLarge { .. } => EXIT_NUMERIC,
            _ => EXIT_INPUT,
        };
        Self { code, msg: e.to_string() }
    }
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INPUT,
        msg: msg.into(),
    }
}

type CmdResult = Result<Report, CliError>;

pub fn resistance(file: &Path, pair: Option<(usize, usize)>, tol: f64) -> CmdResult {
    let text = std::fs::read_to_string(file).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let g = DiGraph::parse_edge_list(&text)?;
    let pipe = Pipeline::with_tol(tol);
    let r = pipe.resistance_matrix(&g)?;
    let n = g.node_count();

    let pairs: Vec<(usize, usize)> = match pair {
        Some((k, j)) => {
            for idx in [k, j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, n }.into());
                }
            }
            vec![(k, j)]
        }
        None => (1..=n).flat_map(|k| (k + 1..=n).map(move |j| (k, j))).collect(),
    };

    let mut report = Report::new(
        "resistance",
        json!({
            "file": file.display().to_string(),
            "nodes": n,
            "edges": g.edge_count(),
            "pair": pair.map(|(k, j)| [k, j]),
            "tol": tol,
        }),
    );
    for (k, j) in pairs {
        let numeric = r.get(k, j);
        let (value, method) = dispatch_resistance_with(&g, k, j, &pipe)?;
        report.results.push(
            Record::new()
                .with("k", k)
                .with("j", j)
                .with("value", value)
                .with("method", method.to_string())
                .with("pipeline", numeric)
                .with("deviation", (value - numeric).abs()),
        );
    }
    Ok(report)
}

pub fn verify_closed_forms(cfg: &ClosedFormConfig) -> CmdResult {
    if cfg.max_cycle < 2 {
        return Err(input_error("--max-cycle must be at least 2"));
    }
    if cfg.tol.is_nan() || cfg.tol < 0.0 {
        return Err(input_error("--tol must be non-negative"));
    }
    let checks = verify::closed_forms(cfg)?;
    let mut report = Report::new("verify-closed-forms", serde_json::to_value(cfg).expect("plain config"));
    let failures = checks.iter().filter(|c| !c.pass).count();
    for c in checks {
        report.results.push(
            Record::new()
                .with("family", c.family)
                .with("method", method_name(c.family))
                .with("cases", c.cases)
                .with("max_deviation", c.max_deviation)
                .with("misrouted", c.misrouted)
                .with("pass", c.pass),
        );
    }
    report.status = Some(Status {
        pass: failures == 0,
        failures,
    });
    Ok(report)
}

fn method_name(family: &str) -> &'static str {
    match family {
        "path" => "series law vs pipeline",
        "cycle" => "parallel law vs pipeline",
        _ => "tree closed form vs pipeline",
    }
}

pub fn verify_identities(sweep: &IdentitySweep) -> CmdResult {
    let checks = verify::identities(sweep)?;
    let only: Vec<String> = sweep.only.iter().map(|id| id.to_string()).collect();
    let mut report = Report::new(
        "verify-identities",
        json!({
            "bounds": sweep.bounds,
            "only": only,
            "perturb": sweep.perturb.map(|id| id.to_string()),
        }),
    );
    let failures = checks.iter().filter(|c| !c.pass).count();
    for c in checks {
        report.results.push(
            Record::new()
                .with("id", c.id)
                .with("family", c.family)
                .with("method", "exact rational")
                .with("cases", c.cases)
                .with("failure_count", c.failure_count)
                .with("failures", serde_json::to_value(&c.failures).expect("integers"))
                .with("pass", c.pass),
        );
    }
    report.status = Some(Status {
        pass: failures == 0,
        failures,
    });
    Ok(report)
}

pub fn tree(n: u32, m: u32, tol: f64) -> CmdResult {
    let params = TreeParams::new(n, m)?;
    let exact = tree_resistance(params);
    let closed = exact.to_f64();

    let (g, k, j) = families::two_branch_tree(n as usize, m as usize);
    let oracle = Pipeline::default().resistance(&g, k, j)?;

    let recurrence = if n >= 1 && m >= 1 {
        let v = if m == 1 {
            tree_r_n1(n.into())?
        } else {
            recurrence_table(n, m)?.remove(&(n, m)).expect("table covers (n, m)")
        };
        Some(v)
    } else {
        None
    };

    let mut report = Report::new("tree", json!({ "n": n, "m": m, "tol": tol }));
    report.results.push(
        Record::new()
            .with("channel", "closed_form")
            .with("exact", exact.to_string())
            .with("value", closed)
            .with("deviation", 0.0),
    );
    report.results.push(
        Record::new()
            .with("channel", "float")
            .with("exact", "")
            .with("value", closed)
            .with("deviation", 0.0),
    );
    report.results.push(
        Record::new()
            .with("channel", "oracle")
            .with("exact", "")
            .with("value", oracle)
            .with("deviation", (oracle - closed).abs()),
    );
    let mut failures = usize::from((oracle - closed).abs() > tol);
    if let Some(rec) = recurrence {
        if rec != exact {
            failures += 1;
        }
        let value = rec.to_f64();
        report.results.push(
            Record::new()
                .with("channel", "recurrence")
                .with("exact", rec.to_string())
                .with("value", value)
                .with("deviation", (value - closed).abs()),
        );
    }
    report.status = Some(Status {
        pass: failures == 0,
        failures,
    });
    Ok(report)
}

pub fn star(max: i64) -> CmdResult {
    if max < 1 {
        return Err(input_error("--max must be at least 1"));
    }
    let mut report = Report::new("star", json!({ "max": max }));
    for n in 1..=max {
        for m in 1..=max {
            let oracle = star3_resistance_oracle(n, m)?;
            let tree = tree_resistance(TreeParams::new(n as u32, m as u32)?).to_f64();
            let printed = star3_resistance_printed(n, m)?.to_f64();
            let observed = star3_resistance_observed(n, m)?.to_f64();
            report.results.push(
                Record::new()
                    .with("n", n)
                    .with("m", m)
                    .with("oracle", oracle)
                    .with("tree_formula", tree)
                    .with("printed_formula", printed)
                    .with("observed_formula", observed)
                    .with("tree_matches", (oracle - tree).abs() <= 1e-9)
                    .with("printed_matches", (oracle - printed).abs() <= 1e-9),
            );
        }
    }
    Ok(report)
}

pub fn parse_identity(name: &str) -> Result<IdentityId, String> {
    IdentityId::from_name(name).ok_or_else(|| {
        let known: Vec<String> = IdentityId::ALL.iter().map(|id| id.to_string()).collect();
        format!("unknown identity `{name}`; expected one of {}", known.join(", "))
    })
}


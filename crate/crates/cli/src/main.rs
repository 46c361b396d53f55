mod commands;
mod report;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dirres::series::SweepBounds;
use dirres::verify::{ClosedFormConfig, IdentitySweep};
use dirres::IdentityId;

use report::Format;

/// Effective resistance on directed graphs.
#[derive(Parser)]
#[command(name = "dirres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Resistance of one node pair, or of every pair, for an edge-list file.
    Resistance {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["K", "J"])]
        pair: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Closed forms against the numerical pipeline on random paths and
    /// cycles and on the unit tree grid.
    VerifyClosedForms {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 12)]
        max_cycle: usize,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Exact sweeps of the finite-series identities.
    VerifyIdentities {
        /// Restrict to these identities (repeatable).
        #[arg(long = "id", value_parser = commands::parse_identity)]
        ids: Vec<IdentityId>,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, hide = true, value_parser = commands::parse_identity)]
        perturb: Option<IdentityId>,
        #[command(flatten)]
        out: Output,
    },
    /// Leaf-to-leaf resistance of the two-branch unit tree on every channel.
    Tree {
        n: u32,
        m: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Three-node star with leaf edge resistances 2n and 2m, for
    /// 1 <= n, m <= max.
    Star {
        #[arg(long, default_value_t = 5)]
        max: i64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, default_value_t = SweepBounds::default().power_sums_n as u32)]
    power_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().partial_sums_n as u32)]
    partial_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().partial_sums_m as u32)]
    partial_m: u32,
    #[arg(long, default_value_t = SweepBounds::default().standard_sums_n as u32)]
    standard_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().specialised_p as u32)]
    specialised_p: u32,
    #[arg(long, default_value_t = SweepBounds::default().manip_n as u32)]
    manip_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().manip_p as u32)]
    manip_p: u32,
    #[arg(long, default_value_t = SweepBounds::default().pascal_n as u32)]
    pascal_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().binomial_formula_n as u32)]
    binomial_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().gh_n as u32)]
    gh_n: u32,
    #[arg(long, default_value_t = SweepBounds::default().gh_p as u32)]
    gh_p: u32,
    #[arg(long, default_value_t = SweepBounds::default().s_max as u32)]
    s_max: u32,
}

impl BoundArgs {
    fn bounds(&self) -> SweepBounds {
        SweepBounds {
            power_sums_n: self.power_n.into(),
            partial_sums_n: self.partial_n.into(),
            partial_sums_m: self.partial_m.into(),
            standard_sums_n: self.standard_n.into(),
            specialised_p: self.specialised_p.into(),
            manip_n: self.manip_n.into(),
            manip_p: self.manip_p.into(),
            pascal_n: self.pascal_n.into(),
            binomial_formula_n: self.binomial_n.into(),
            gh_n: self.gh_n.into(),
            gh_p: self.gh_p.into(),
            s_max: self.s_max.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, format) = match cli.command {
        Command::Resistance { file, pair, tol, out } => {
            let pair = pair.map(|p| (p[0], p[1]));
            (commands::resistance(&file, pair, tol), out.format)
        }
        Command::VerifyClosedForms {
            max_n,
            max_cycle,
            instances,
            seed,
            tol,
            out,
        } => {
            let cfg = ClosedFormConfig {
                max_n,
                max_cycle,
                instances,
                seed,
                tol,
            };
            (commands::verify_closed_forms(&cfg), out.format)
        }
        Command::VerifyIdentities {
            ids,
            bounds,
            perturb,
            out,
        } => {
            let sweep = IdentitySweep {
                bounds: bounds.bounds(),
                only: ids,
                perturb,
            };
            (commands::verify_identities(&sweep), out.format)
        }
        Command::Tree { n, m, tol, out } => (commands::tree(n, m, tol), out.format),
        Command::Star { max, out } => (commands::star(max), out.format),
    };

    match result {
        Ok(report) => {
            if let Err(e) = report.write(format, io::stdout().lock()) {
                eprintln!("error: {e}");
                return ExitCode::from(commands::EXIT_NUMERIC);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(commands::EXIT_VERIFY)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

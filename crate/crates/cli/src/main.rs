//! `mldom`: exact invariants, tree formulas, set transforms, generators and
//! verification sweeps from the command line.
//!
//! Exit codes: 0 success, 1 usage, parse or I/O error, 2 a proven bound or
//! certificate failed, 3 a solver budget ran out.

mod commands;
mod labels;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mldom_core::transforms::TransformError;
use mldom_core::SolveError;

#[derive(Parser)]
#[command(name = "mldom", version, about = "Metric-location-domination toolkit")]
struct Cli {
    /// Worker threads for corpus sweeps (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve all five invariants of a graph and check the inequality chains.
    Compute {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        /// Per-invariant budget in seconds.
        #[arg(long, default_value_t = 60)]
        budget: u64,
    },
    /// Tree profile, closed formulas and characterizations.
    Tree {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        /// Cross-check every formula against the exact solver.
        #[arg(long)]
        check: bool,
    },
    /// Apply a constructive transformation to an MLD-set.
    Transform {
        input: PathBuf,
        which: TransformKind,
        /// `solve` for the minimum MLD witness, or a comma-separated list of
        /// vertex indices or labels.
        #[arg(long, default_value = "solve")]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a graph family as an edge list plus a label sidecar.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output edge-list path; the sidecar goes next to it. Prints the
        /// edge list to stdout when omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run the verification harness over a corpus.
    Verify(VerifyArgs),
    /// Search small graphs for a tightness witness.
    Search {
        /// `psi-eq-2gm`, `psi-eq-gm-plus-g` or `ratio-gl-gm:<threshold>`.
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long)]
        seed: u64,
        /// Maximum number of graphs solved.
        #[arg(long, default_value_t = 100_000)]
        budget_graphs: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Pi,
    Bars,
    Union,
}

#[derive(Subcommand)]
enum Family {
    /// The exponential-gap family `G_s`, `1 <= s <= 4`.
    Gs {
        s: u32,
    },
    /// The comb: a path `a_1..a_t` with a pendant `b_i` on each `a_i`.
    Comb {
        t: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,k}`.
    Star {
        k: usize,
    },
    Spider {
        legs: usize,
        len: usize,
    },
    DoubleStar {
        left: usize,
        right: usize,
    },
    /// Uniform labeled tree from a random Prüfer code.
    Tree {
        #[arg(long, required = true)]
        random: bool,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Connected Erdős–Rényi sample.
    Connected {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        seed: u64,
    },
    /// Random tree grown by edges that keep a cycle constraint.
    Constrained {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long, value_enum)]
        constraint: ConstraintArg,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstraintArg {
    C4c6Free,
    Girth5,
}

#[derive(Args)]
struct VerifyArgs {
    /// Corpus spec as JSON.
    #[arg(long, conflicts_with_all = ["trees", "graphs"])]
    file: Option<PathBuf>,
    /// Number of random Prüfer trees.
    #[arg(long)]
    trees: Option<usize>,
    /// Number of random connected graphs.
    #[arg(long)]
    graphs: Option<usize>,
    /// Largest order of the random members.
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    #[arg(long, required_unless_present = "file")]
    seed: Option<u64>,
    /// JSON-lines report path.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(cli.command) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_timeout(&e) { 3 } else { 1 })
        }
    }
}

fn is_timeout(e: &anyhow::Error) -> bool {
    e.chain().any(|cause| {
        let solve = cause.downcast_ref::<SolveError>().or_else(|| {
            match cause.downcast_ref::<TransformError>() {
                Some(TransformError::Solve(inner)) => Some(inner),
                _ => None,
            }
        });
        matches!(solve, Some(SolveError::Timeout { .. }))
    })
}

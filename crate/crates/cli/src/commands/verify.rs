use std::fs;

use anyhow::{bail, Context, Result};
use mldom_core::harness::{
    corpus_report, witness_search, CorpusMember, CorpusSpec, SearchConfig, SearchGoal,
};
use mldom_core::solver::MAX_SOLVER_VERTICES;

use super::{print_json, Status};
use crate::VerifyArgs;

/// Violations printed before the list is truncated.
const SHOWN: usize = 20;

pub fn run_verify(args: VerifyArgs) -> Result<Status> {
    let spec = match &args.file {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing corpus spec {}", path.display()))?
        }
        None => {
            let seed = args.seed.context("--seed is required")?;
            if args.nmax < 4 || args.nmax > MAX_SOLVER_VERTICES {
                bail!("--nmax must lie in 4..={MAX_SOLVER_VERTICES}");
            }
            let mut members = Vec::new();
            if let Some(count) = args.trees {
                members.push(CorpusMember::Prufer {
                    count,
                    n_min: 4,
                    n_max: args.nmax,
                    seed,
                });
            }
            if let Some(count) = args.graphs {
                members.push(CorpusMember::RandomConnected {
                    count,
                    n_min: 2,
                    n_max: args.nmax,
                    p: 0.35,
                    seed,
                });
            }
            if members.is_empty() {
                bail!("nothing to verify: pass --file, --trees or --graphs");
            }
            CorpusSpec {
                members,
                budget_secs: None,
            }
        }
    };

    let summary = corpus_report(&spec, args.out.as_deref())?;
    println!(
        "{} graphs: {} fatal violations, {} conjecture counterexamples, {} graphs with timeouts",
        summary.graphs,
        summary.fatal.len(),
        summary.conjecture.len(),
        summary.timeouts
    );
    for v in summary.fatal.iter().take(SHOWN) {
        println!("  VIOLATION {} {}: {}", v.graph_id, v.check, v.detail);
    }
    if !summary.conjecture.is_empty() {
        println!("*** counterexamples to psi <= dim + gamma ***");
        for v in summary.conjecture.iter().take(SHOWN) {
            println!("  {} {}", v.graph_id, v.detail);
        }
    }
    if let Some(out) = &args.out {
        println!("report written to {}", out.display());
    }
    Ok(if !summary.fatal.is_empty() {
        Status::Violation
    } else if summary.timeouts > 0 {
        Status::Timeout
    } else {
        Status::Ok
    })
}

pub fn run_search(
    goal: &str,
    nmin: usize,
    nmax: usize,
    seed: u64,
    budget_graphs: usize,
    json: bool,
) -> Result<Status> {
    let goal: SearchGoal = goal.parse().map_err(anyhow::Error::msg)?;
    if nmax > 10 {
        bail!("--nmax must be at most 10");
    }
    let mut cfg = SearchConfig::new(goal, nmax, budget_graphs, seed);
    cfg.n_min = nmin;
    let r = witness_search(&cfg);
    let status = match &r.found {
        Some(w) if !w.reverified => Status::Violation,
        _ => Status::Ok,
    };
    if json {
        print_json(serde_json::to_value(&r)?)?;
        return Ok(status);
    }
    match &r.found {
        Some(w) => {
            let v = w.values;
            println!(
                "goal {}: found after {} graphs ({:.2?})",
                r.goal, r.graphs_examined, r.budget_spent
            );
            println!("  n={} edges={:?}", w.n, w.edges);
            println!(
                "  gamma={} dim={} gammaM={} gammaL={} psi={}",
                v.gamma, v.dim, v.gamma_m, v.gamma_l, v.psi
            );
            println!("  re-verified: {}", w.reverified);
        }
        None => println!(
            "goal {}: no witness among {} graphs ({:.2?})",
            r.goal, r.graphs_examined, r.budget_spent
        ),
    }
    Ok(status)
}

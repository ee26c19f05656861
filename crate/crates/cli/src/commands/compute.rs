use std::path::Path;
use std::time::Duration;

use anyhow::Result;
use mldom_core::harness::{analyze_entry, CorpusEntry};
use mldom_core::{io, Invariant, SolveOptions};

use super::{print_json, Status};
use crate::labels::Labels;

pub fn run(input: &Path, json: bool, budget: u64) -> Result<Status> {
    let graph = io::read_edge_list(input)?;
    let labels = Labels::for_input(input)?;
    let entry = CorpusEntry {
        graph_id: input.display().to_string(),
        graph,
        is_gs: false,
    };
    let rec = analyze_entry(
        &entry,
        &SolveOptions {
            budget: Duration::from_secs(budget),
        },
    );
    let (fatal, conjecture) = rec.violations();
    let status = if !fatal.is_empty() {
        Status::Violation
    } else if !rec.timeouts.is_empty() {
        Status::Timeout
    } else {
        Status::Ok
    };
    if json {
        print_json(serde_json::to_value(&rec)?)?;
        return Ok(status);
    }

    println!(
        "{}: n={} m={} girth={} tree={} c4c6-free={}",
        rec.graph_id, rec.n, rec.m, rec.girth, rec.is_tree, rec.c4c6_free
    );
    for inv in Invariant::ALL {
        match (rec.invariants.get(&inv), rec.witnesses.get(&inv)) {
            (Some(v), Some(w)) => println!("  {:<7}= {v}  {}", inv.name(), labels.set(w)),
            _ => println!("  {:<7}= ?  (not solved)", inv.name()),
        }
    }
    for e in &rec.timeouts {
        println!("  {e}");
    }
    if !rec.chains.is_empty() {
        println!("chains:");
        for c in &rec.chains {
            let values: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!(
                "  [{}] {} ({})",
                mark(c.holds),
                c.chain.name(),
                values.join(" ")
            );
        }
    }
    if !rec.suites.is_empty() {
        println!("suites:");
        for s in &rec.suites {
            println!("  [{}] {}", mark(s.holds), s.suite);
            for f in &s.failures {
                println!("      {f}");
            }
        }
    }
    for e in &rec.errors {
        println!("  error: {e}");
    }
    if !conjecture.is_empty() {
        println!("NOTE: this graph violates the conjectured bound psi <= dim + gamma");
    }
    Ok(status)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

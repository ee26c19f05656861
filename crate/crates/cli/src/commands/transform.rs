use std::path::Path;

use anyhow::{bail, Result};
use mldom_core::solver::{self, Invariant};
use mldom_core::transforms::{self, TransformOutcome};
use mldom_core::{io, SolveOptions};
use serde_json::json;

use super::{print_json, Status};
use crate::labels::Labels;
use crate::TransformKind;

pub fn run(input: &Path, which: TransformKind, set: &str, as_json: bool) -> Result<Status> {
    let g = io::read_edge_list(input)?;
    let labels = Labels::for_input(input)?;
    let input_set = || -> Result<_> {
        Ok(if set == "solve" {
            solver::solve(&g, Invariant::GammaM)?.witness
        } else {
            labels.parse_set(g.n(), set)?
        })
    };
    let (target, outcome, extra) = match which {
        TransformKind::Pi => ("LD-set", transforms::pi_closure(&g, &input_set()?)?, None),
        TransformKind::Bars => (
            "doubly resolving set",
            transforms::bar_s(&g, &input_set()?)?,
            None,
        ),
        TransformKind::Union => {
            if set != "solve" {
                bail!("union derives both input sets from the solver; --set is not accepted");
            }
            let r = transforms::union_repair_with(&g, &SolveOptions::default())?;
            let extra = (
                r.mld_set.clone(),
                r.dominating_set.clone(),
                r.repairs.clone(),
            );
            ("doubly resolving set", r.outcome, Some(extra))
        }
    };
    let status = if outcome.certified && outcome.size_bound_ok {
        Status::Ok
    } else {
        Status::Violation
    };

    if as_json {
        let mut value = serde_json::to_value(&outcome)?;
        if let Some((s1, s2, repairs)) = &extra {
            value["mld_set"] = json!(s1);
            value["dominating_set"] = json!(s2);
            value["repairs"] = json!(repairs);
        }
        print_json(value)?;
        return Ok(status);
    }
    if let Some((s1, s2, repairs)) = &extra {
        println!("mld set        {}", labels.set(s1));
        println!("dominating set {}", labels.set(s2));
        println!("repairs        {}", labels.set(repairs));
    }
    print_outcome(&labels, &outcome, target);
    Ok(status)
}

fn print_outcome(labels: &Labels, r: &TransformOutcome, target: &str) {
    println!("input  {}", labels.set(&r.input_set));
    println!("output {}", labels.set(&r.output_set));
    println!(
        "certified {target}: {}",
        if r.certified { "yes" } else { "NO" }
    );
    println!(
        "size {} against bound {}: {}",
        r.output_set.len(),
        r.size_bound,
        if r.size_bound_ok { "ok" } else { "EXCEEDED" }
    );
}

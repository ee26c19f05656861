use std::path::Path;

use anyhow::Result;
use mldom_core::io;
use mldom_core::solver::{self, Invariant};
use mldom_core::tree::{self, CharacterizationVerdict};
use serde_json::json;

use super::{print_json, Status};
use crate::labels::Labels;

pub fn run(input: &Path, as_json: bool, check: bool) -> Result<Status> {
    let t = io::read_edge_list(input)?;
    let labels = Labels::for_input(input)?;
    let p = tree::profile(&t)?;
    let gamma = tree::gamma_tree(&t)?;
    let gamma_m = tree::gamma_m_tree(&t)?;
    let (dim, dim_witness) = tree::dim_tree(&t)?;
    let dim_gamma = if p.is_path {
        None
    } else {
        Some(tree::characterize_mld_dim_gamma(&t)?)
    };
    let leaves = if t.n() > 2 {
        Some(tree::characterize_mld_leaves(&t)?)
    } else {
        None
    };

    let mut status = Status::Ok;
    let mut mismatches = Vec::new();
    let mut solved = None;
    if check {
        let report = solver::solve_all(&t);
        if !report.timeouts().is_empty() {
            status = Status::Timeout;
        }
        for (inv, formula) in [
            (Invariant::Gamma, gamma),
            (Invariant::Dim, dim),
            (Invariant::GammaM, gamma_m),
        ] {
            if let Some(v) = report.value(inv) {
                if v != formula {
                    mismatches.push(format!("{inv}: formula {formula}, solver {v}"));
                }
            }
        }
        solved = report.values();
    }
    let inconsistent = [&dim_gamma, &leaves]
        .into_iter()
        .flatten()
        .any(|c| !c.all_equal);
    if !mismatches.is_empty() || inconsistent {
        status = Status::Violation;
    }

    if as_json {
        print_json(json!({
            "profile": p,
            "formulas": {"gamma": gamma, "gammaM": gamma_m, "dim": dim, "dim_witness": dim_witness},
            "characterize_mld_dim_gamma": dim_gamma,
            "characterize_mld_leaves": leaves,
            "solver": solved,
            "mismatches": mismatches,
        }))?;
        return Ok(status);
    }

    println!(
        "{}: n={} leaves={} supports={} strong supports={}",
        input.display(),
        t.n(),
        p.ell(),
        labels.set(&p.supports),
        labels.set(&p.strong_supports)
    );
    println!("  exterior majors {}", labels.set(&p.exterior_majors));
    println!("  gamma  = {gamma}");
    println!("  gammaM = {gamma_m}  (gamma + l' - |strong supports|)");
    println!("  dim    = {dim}  {}", labels.set(&dim_witness));
    print_verdict(
        "gammaM = dim + gamma characterization",
        dim_gamma.as_ref(),
        "not defined for paths",
    );
    print_verdict(
        "gammaM = leaves characterization",
        leaves.as_ref(),
        "not defined for P_2",
    );
    if let Some(v) = solved {
        println!(
            "  solver: gamma={} dim={} gammaM={} gammaL={} psi={}",
            v.gamma, v.dim, v.gamma_m, v.gamma_l, v.psi
        );
    }
    for m in &mismatches {
        println!("  MISMATCH {m}");
    }
    Ok(status)
}

fn print_verdict(title: &str, v: Option<&CharacterizationVerdict>, missing: &str) {
    match v {
        Some(v) => {
            let flags: Vec<&str> = v
                .statement_flags
                .iter()
                .map(|&f| if f { "true" } else { "false" })
                .collect();
            let agree = if v.all_equal { "all agree" } else { "DISAGREE" };
            println!("  {title}: [{}] {agree}", flags.join(", "));
        }
        None => println!("  {title}: {missing}"),
    }
}

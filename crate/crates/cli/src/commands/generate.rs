use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use mldom_core::families::{self, Constraint, LabeledGraph};
use mldom_core::io;

use super::Status;
use crate::{ConstraintArg, Family};

pub fn run(family: Family, output: Option<&Path>) -> Result<Status> {
    let g = match family {
        Family::Gs { s } => families::gen_g_s(s)?,
        Family::Comb { t } => families::gen_comb(t)?,
        Family::Path { n } => families::gen_path(n)?,
        Family::Cycle { n } => families::gen_cycle(n)?,
        Family::Star { k } => families::gen_star(k)?,
        Family::Spider { legs, len } => families::gen_spider(legs, len)?,
        Family::DoubleStar { left, right } => families::gen_double_star(left, right)?,
        Family::Tree { n, seed, .. } => unlabeled(families::gen_random_tree(n, seed)?),
        Family::Connected { n, p, seed } => unlabeled(families::gen_random_connected(n, p, seed)?),
        Family::Constrained {
            n,
            edges,
            constraint,
            seed,
        } => {
            let c = match constraint {
                ConstraintArg::C4c6Free => Constraint::C4C6Free,
                ConstraintArg::Girth5 => Constraint::Girth5,
            };
            unlabeled(families::gen_random_constrained(n, edges, c, seed)?)
        }
    };
    let text = io::write_edge_list(&g.graph);
    let Some(path) = output else {
        print!("{text}");
        return Ok(Status::Ok);
    };
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    let sidecar = io::sidecar_path(path);
    if g.labels.is_empty() {
        println!(
            "wrote {} (n={}, m={})",
            path.display(),
            g.graph.n(),
            g.graph.edge_count()
        );
    } else {
        fs::write(&sidecar, serde_json::to_string_pretty(&g.labels)?)
            .with_context(|| format!("writing {}", sidecar.display()))?;
        println!(
            "wrote {} (n={}, m={}) and {}",
            path.display(),
            g.graph.n(),
            g.graph.edge_count(),
            sidecar.display()
        );
    }
    Ok(Status::Ok)
}

fn unlabeled(graph: mldom_core::Graph) -> LabeledGraph {
    LabeledGraph {
        graph,
        labels: Default::default(),
    }
}

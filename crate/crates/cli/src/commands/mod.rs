mod compute;
mod generate;
mod transform;
mod tree;
mod verify;

use anyhow::Result;

use crate::Command;

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Violation = 2,
    Timeout = 3,
}

pub fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::Compute {
            input,
            json,
            budget,
        } => compute::run(&input, json, budget),
        Command::Tree { input, json, check } => tree::run(&input, json, check),
        Command::Transform {
            input,
            which,
            set,
            json,
        } => transform::run(&input, which, &set, json),
        Command::Generate { family, output } => generate::run(family, output.as_deref()),
        Command::Verify(args) => verify::run_verify(args),
        Command::Search {
            goal,
            nmax,
            nmin,
            seed,
            budget_graphs,
            json,
        } => verify::run_search(&goal, nmin, nmax, seed, budget_graphs, json),
    }
}

fn print_json(value: serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(())
}

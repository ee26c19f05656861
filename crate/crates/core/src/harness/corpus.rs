use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chains::{chains_from_report, ld_gap_verdict, ChainVerdict};
use super::suites::{lemma_suite_for, transform_suite_with, tree_suite, union_suite, SuiteOutcome};
use super::HarnessError;
use crate::families::{self, Constraint};
use crate::graph::{Girth, Graph};
use crate::io;
use crate::solver::{self, Invariant, SolveError, SolveOptions};
use crate::vertex_set::VertexSet;

/// A corpus description, usually read from JSON:
///
/// ```json
/// {"members": [
///   {"family": "paths", "n_min": 2, "n_max": 12},
///   {"family": "prufer", "count": 500, "n_min": 4, "n_max": 12, "seed": 1}
/// ]}
/// ```
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub members: Vec<CorpusMember>,
    /// Per-invariant solver budget in seconds.
    #[serde(default)]
    pub budget_secs: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum CorpusMember {
    Paths {
        n_min: usize,
        n_max: usize,
    },
    Stars {
        k_min: usize,
        k_max: usize,
    },
    /// Every `S(l, r)` with `1 <= l <= r <= max_leaves`.
    DoubleStars {
        max_leaves: usize,
    },
    /// Every spider with `3..=max_legs` legs of `1..=max_len` vertices.
    Spiders {
        max_legs: usize,
        max_len: usize,
    },
    Prufer {
        count: usize,
        n_min: usize,
        n_max: usize,
        seed: u64,
    },
    RandomConnected {
        count: usize,
        n_min: usize,
        n_max: usize,
        p: f64,
        seed: u64,
    },
    Constrained {
        count: usize,
        n_min: usize,
        n_max: usize,
        constraint: Constraint,
        seed: u64,
    },
    /// Every connected labeled graph with `2..=n_max` vertices.
    Exhaustive {
        n_max: usize,
    },
    Gs {
        s: u32,
    },
    Comb {
        t: usize,
    },
    File {
        path: PathBuf,
    },
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub graph_id: String,
    pub graph: Graph,
    pub is_gs: bool,
}

impl CorpusEntry {
    fn new(graph_id: String, graph: Graph) -> Self {
        CorpusEntry {
            graph_id,
            graph,
            is_gs: false,
        }
    }
}

fn sized(n_min: usize, n_max: usize, what: &str) -> Result<(), HarnessError> {
    if n_min > n_max {
        return Err(families::FamilyError::OutOfRange(format!(
            "{what}: n_min {n_min} > n_max {n_max}"
        ))
        .into());
    }
    Ok(())
}

fn expand_member(member: &CorpusMember) -> Result<Vec<CorpusEntry>, HarnessError> {
    let mut out = Vec::new();
    match *member {
        CorpusMember::Paths { n_min, n_max } => {
            for n in n_min..=n_max {
                out.push(CorpusEntry::new(
                    format!("path-{n}"),
                    families::gen_path(n)?.graph,
                ));
            }
        }
        CorpusMember::Stars { k_min, k_max } => {
            for k in k_min..=k_max {
                out.push(CorpusEntry::new(
                    format!("star-{k}"),
                    families::gen_star(k)?.graph,
                ));
            }
        }
        CorpusMember::DoubleStars { max_leaves } => {
            for l in 1..=max_leaves {
                for r in l..=max_leaves {
                    out.push(CorpusEntry::new(
                        format!("double_star-{l}-{r}"),
                        families::gen_double_star(l, r)?.graph,
                    ));
                }
            }
        }
        CorpusMember::Spiders { max_legs, max_len } => {
            for legs in 3..=max_legs {
                for len in 1..=max_len {
                    out.push(CorpusEntry::new(
                        format!("spider-{legs}x{len}"),
                        families::gen_spider(legs, len)?.graph,
                    ));
                }
            }
        }
        CorpusMember::Prufer {
            count,
            n_min,
            n_max,
            seed,
        } => {
            sized(n_min, n_max, "prufer")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..count {
                let n = rng.gen_range(n_min..=n_max);
                let g = families::gen_random_tree(n, rng.gen())?;
                out.push(CorpusEntry::new(format!("prufer-{seed}-{i}-n{n}"), g));
            }
        }
        CorpusMember::RandomConnected {
            count,
            n_min,
            n_max,
            p,
            seed,
        } => {
            sized(n_min, n_max, "random_connected")?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..count {
                let n = rng.gen_range(n_min..=n_max);
                let g = families::gen_random_connected(n, p, rng.gen())?;
                out.push(CorpusEntry::new(format!("random-{seed}-{i}-n{n}"), g));
            }
        }
        CorpusMember::Constrained {
            count,
            n_min,
            n_max,
            constraint,
            seed,
        } => {
            sized(n_min, n_max, "constrained")?;
            let tag = match constraint {
                Constraint::C4C6Free => "c4c6free",
                Constraint::Girth5 => "girth5",
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..count {
                let n = rng.gen_range(n_min..=n_max);
                let target = rng.gen_range(n - 1..=2 * n);
                let g = families::gen_random_constrained(n, target, constraint, rng.gen())?;
                out.push(CorpusEntry::new(format!("{tag}-{seed}-{i}-n{n}"), g));
            }
        }
        CorpusMember::Exhaustive { n_max } => {
            for n in 2..=n_max {
                for (i, g) in families::enumerate_connected_graphs(n)?
                    .into_iter()
                    .enumerate()
                {
                    out.push(CorpusEntry::new(format!("exhaustive-n{n}-{i}"), g));
                }
            }
        }
        CorpusMember::Gs { s } => {
            out.push(CorpusEntry {
                graph_id: format!("gs-{s}"),
                graph: families::gen_g_s(s)?.graph,
                is_gs: true,
            });
        }
        CorpusMember::Comb { t } => {
            out.push(CorpusEntry::new(
                format!("comb-{t}"),
                families::gen_comb(t)?.graph,
            ));
        }
        CorpusMember::File { ref path } => {
            out.push(CorpusEntry::new(
                format!("file:{}", path.display()),
                io::read_edge_list(path)?,
            ));
        }
    }
    Ok(out)
}

/// Materializes every member in spec order.
pub fn expand_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>, HarnessError> {
    let mut out = Vec::new();
    for m in &spec.members {
        out.extend(expand_member(m)?);
    }
    Ok(out)
}

/// One line of the JSON-lines report.
///
/// `invariants` and `witnesses` are keyed by invariant name (`gamma`, `dim`,
/// `gammaM`, `gammaL`, `psi`) and omit any invariant whose search timed out;
/// those are listed under `timeouts`. `errors` holds suite failures that
/// prevented a suite from running at all.
#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub is_tree: bool,
    pub c4c6_free: bool,
    pub invariants: BTreeMap<Invariant, usize>,
    pub witnesses: BTreeMap<Invariant, VertexSet>,
    pub chains: Vec<ChainVerdict>,
    pub suites: Vec<SuiteOutcome>,
    pub timeouts: Vec<SolveError>,
    pub errors: Vec<String>,
}

impl GraphRecord {
    pub fn violations(&self) -> (Vec<Violation>, Vec<Violation>) {
        let mut fatal = Vec::new();
        let mut conjecture = Vec::new();
        for c in self.chains.iter().filter(|c| !c.holds) {
            let v = Violation {
                graph_id: self.graph_id.clone(),
                check: format!("{:?}", c.chain),
                detail: format!("{:?}", c.values),
            };
            if c.chain.is_conjecture() {
                conjecture.push(v);
            } else {
                fatal.push(v);
            }
        }
        for s in self.suites.iter().filter(|s| !s.holds) {
            fatal.push(Violation {
                graph_id: self.graph_id.clone(),
                check: s.suite.to_string(),
                detail: s.failures.join("; "),
            });
        }
        for e in &self.errors {
            fatal.push(Violation {
                graph_id: self.graph_id.clone(),
                check: "error".into(),
                detail: e.clone(),
            });
        }
        (fatal, conjecture)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    /// Failed proven bounds or suites: each one is a bug.
    pub fatal: Vec<Violation>,
    /// Counterexamples to the conjectured `ψ <= dim + γ`.
    pub conjecture: Vec<Violation>,
    /// Graphs with at least one timed-out invariant.
    pub timeouts: usize,
}

impl CorpusSummary {
    pub fn add(&mut self, r: &GraphRecord) {
        self.graphs += 1;
        let (fatal, conjecture) = r.violations();
        self.fatal.extend(fatal);
        self.conjecture.extend(conjecture);
        if !r.timeouts.is_empty() {
            self.timeouts += 1;
        }
    }
}

/// Solves one graph and runs every applicable chain and suite on it.
pub fn analyze_entry(entry: &CorpusEntry, opts: &SolveOptions) -> GraphRecord {
    let g = &entry.graph;
    let report = solver::solve_all_with(g, opts);
    let mut rec = GraphRecord {
        graph_id: entry.graph_id.clone(),
        n: report.n,
        m: report.m,
        girth: report.girth,
        is_tree: report.is_tree,
        c4c6_free: report.c4_c6_free,
        invariants: BTreeMap::new(),
        witnesses: BTreeMap::new(),
        chains: chains_from_report(g, &report, &entry.graph_id),
        suites: Vec::new(),
        timeouts: report.timeouts().into_iter().cloned().collect(),
        errors: Vec::new(),
    };
    for (&inv, r) in &report.results {
        if let Ok(r) = r {
            rec.invariants.insert(inv, r.value);
            rec.witnesses.insert(inv, r.witness.clone());
        }
    }
    if !rec.timeouts.is_empty() {
        return rec;
    }
    if entry.is_gs {
        rec.chains.push(ld_gap_verdict(
            rec.invariants[&Invariant::GammaM],
            rec.invariants[&Invariant::GammaL],
            &entry.graph_id,
        ));
    }

    rec.suites
        .push(lemma_suite_for(g, &rec.witnesses[&Invariant::GammaM]));
    let mut record = |r: Result<SuiteOutcome, HarnessError>| match r {
        Ok(s) => rec.suites.push(s),
        Err(HarnessError::NoApplicableTransform) => {}
        Err(e) => rec.errors.push(e.to_string()),
    };
    record(union_suite(g, &report));
    record(transform_suite_with(g, &report));
    if report.is_tree {
        record(tree_suite(g, &report));
    }
    rec
}

/// Runs the whole corpus in parallel and, when `output` is given, writes one
/// JSON line per graph in corpus order.
pub fn corpus_report(
    spec: &CorpusSpec,
    output: Option<&Path>,
) -> Result<CorpusSummary, HarnessError> {
    let entries = expand_corpus(spec)?;
    let mut opts = SolveOptions::default();
    if let Some(secs) = spec.budget_secs {
        opts.budget = Duration::from_secs(secs);
    }
    let records: Vec<GraphRecord> = entries
        .par_iter()
        .map(|e| analyze_entry(e, &opts))
        .collect();

    if let Some(path) = output {
        let mut w = BufWriter::new(File::create(path)?);
        for r in &records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
    }
    let mut summary = CorpusSummary::default();
    for r in &records {
        summary.add(r);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parses_from_json() {
        let spec: CorpusSpec = serde_json::from_str(
            r#"{"members": [
                {"family": "paths", "n_min": 2, "n_max": 4},
                {"family": "constrained", "count": 2, "n_min": 5, "n_max": 6, "constraint": "girth5", "seed": 3},
                {"family": "gs", "s": 1}
            ]}"#,
        )
        .unwrap();
        let entries = expand_corpus(&spec).unwrap();
        let ids: Vec<_> = entries.iter().map(|e| e.graph_id.as_str()).collect();
        assert_eq!(ids[..3], ["path-2", "path-3", "path-4"]);
        assert_eq!(entries.len(), 6);
        assert!(entries[5].is_gs);
    }

    #[test]
    fn paths_report_clean_and_in_order() {
        let spec = CorpusSpec {
            members: vec![CorpusMember::Paths { n_min: 2, n_max: 8 }],
            budget_secs: None,
        };
        let dir = std::env::temp_dir().join(format!("mldom-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let out = dir.join("paths.jsonl");
        let summary = corpus_report(&spec, Some(&out)).unwrap();
        assert_eq!(summary.graphs, 7);
        assert!(summary.fatal.is_empty(), "{:?}", summary.fatal);
        let text = std::fs::read_to_string(&out).unwrap();
        let ids: Vec<String> = text
            .lines()
            .map(|l| {
                serde_json::from_str::<serde_json::Value>(l).unwrap()["graph_id"]
                    .as_str()
                    .unwrap()
                    .to_string()
            })
            .collect();
        assert_eq!(
            ids,
            (2..=8).map(|n| format!("path-{n}")).collect::<Vec<_>>()
        );
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn gs_record_carries_gap_verdict() {
        let entry = CorpusEntry {
            graph_id: "gs-1".into(),
            graph: families::gen_g_s(1).unwrap().graph,
            is_gs: true,
        };
        let rec = analyze_entry(&entry, &SolveOptions::default());
        let gap = rec
            .chains
            .iter()
            .find(|c| c.chain == super::super::ChainId::LdExponentialGap)
            .unwrap();
        assert!(gap.holds);
        let json = serde_json::to_value(&rec).unwrap();
        assert!(json["invariants"]["gammaM"].as_u64().unwrap() <= 4);
    }
}

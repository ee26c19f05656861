use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families;
use crate::graph::Graph;
use crate::solver::{self, InvariantValues, SolveOptions};

/// Largest order the exhaustive phase enumerates.
const EXHAUSTIVE_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SearchGoal {
    PsiEqualsTwiceGammaM,
    PsiEqualsGammaMPlusGamma,
    /// `γ_L / γ_M >= threshold`
    RatioGammaLOverGammaM(f64),
}

impl SearchGoal {
    pub fn satisfied_by(self, v: &InvariantValues) -> bool {
        match self {
            SearchGoal::PsiEqualsTwiceGammaM => v.psi == 2 * v.gamma_m,
            SearchGoal::PsiEqualsGammaMPlusGamma => v.psi == v.gamma_m + v.gamma,
            SearchGoal::RatioGammaLOverGammaM(t) => v.gamma_l as f64 >= t * v.gamma_m as f64,
        }
    }
}

impl fmt::Display for SearchGoal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchGoal::PsiEqualsTwiceGammaM => f.write_str("psi = 2*gammaM"),
            SearchGoal::PsiEqualsGammaMPlusGamma => f.write_str("psi = gammaM + gamma"),
            SearchGoal::RatioGammaLOverGammaM(t) => write!(f, "gammaL / gammaM >= {t}"),
        }
    }
}

impl FromStr for SearchGoal {
    type Err = String;

    /// `psi-eq-2gm`, `psi-eq-gm-plus-g`, or `ratio-gl-gm:<threshold>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "psi-eq-2gm" => Ok(SearchGoal::PsiEqualsTwiceGammaM),
            "psi-eq-gm-plus-g" => Ok(SearchGoal::PsiEqualsGammaMPlusGamma),
            _ => {
                let t = s.strip_prefix("ratio-gl-gm:").ok_or_else(|| {
                    format!("unknown goal `{s}` (psi-eq-2gm, psi-eq-gm-plus-g, ratio-gl-gm:<t>)")
                })?;
                t.parse()
                    .map(SearchGoal::RatioGammaLOverGammaM)
                    .map_err(|_| format!("bad ratio `{t}`"))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub goal: SearchGoal,
    /// Smallest order considered.
    pub n_min: usize,
    /// Largest order considered (at most 10).
    pub n_max: usize,
    /// Number of graphs solved before giving up.
    pub budget_graphs: usize,
    pub seed: u64,
    pub solve: SolveOptions,
}

impl SearchConfig {
    pub fn new(goal: SearchGoal, n_max: usize, budget_graphs: usize, seed: u64) -> Self {
        SearchConfig {
            goal,
            n_min: 3,
            n_max,
            budget_graphs,
            seed,
            solve: SolveOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FoundWitness {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub values: InvariantValues,
    /// A fresh solver run on the found graph reproduced the goal.
    pub reverified: bool,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub goal: String,
    pub found: Option<FoundWitness>,
    pub graphs_examined: usize,
    #[serde(skip)]
    pub budget_spent: Duration,
}

/// Streams candidate graphs through the solvers and returns the first one
/// meeting the goal.
///
/// Orders up to 7 are enumerated exhaustively (labeled graphs, skipping any
/// whose degree sequence and distance multiset were already seen); larger
/// orders are sampled at random. The budget counts solved graphs, so the
/// result is a deterministic function of the configuration.
pub fn witness_search(cfg: &SearchConfig) -> SearchResult {
    assert!(cfg.n_max <= 10, "witness search supports n_max <= 10");
    let start = Instant::now();
    let mut examined = 0;
    let mut found = None;
    let mut seen = HashSet::new();
    let exhaustive_top = cfg.n_max.min(EXHAUSTIVE_MAX_N);

    let try_graph = |g: Graph, examined: &mut usize| -> Option<FoundWitness> {
        *examined += 1;
        let values = solver::solve_all_with(&g, &cfg.solve).values()?;
        if !cfg.goal.satisfied_by(&values) {
            return None;
        }
        let reverified = solver::solve_all(&g)
            .values()
            .is_some_and(|v| v == values && cfg.goal.satisfied_by(&v));
        Some(FoundWitness {
            n: g.n(),
            edges: g.edges(),
            values,
            reverified,
            graph: g,
        })
    };

    'exhaustive: for n in cfg.n_min.max(2)..=exhaustive_top {
        for g in ConnectedGraphs::new(n) {
            if examined >= cfg.budget_graphs {
                break 'exhaustive;
            }
            if !seen.insert(memo_key(&g)) {
                continue;
            }
            if let Some(w) = try_graph(g, &mut examined) {
                found = Some(w);
                break 'exhaustive;
            }
        }
    }

    let random_lo = cfg.n_min.max(EXHAUSTIVE_MAX_N + 1);
    if found.is_none() && random_lo <= cfg.n_max {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        while examined < cfg.budget_graphs {
            let n = rng.gen_range(random_lo..=cfg.n_max);
            let p = rng.gen_range(0.2..0.6);
            let Ok(g) = families::gen_random_connected(n, p, rng.gen()) else {
                continue;
            };
            if let Some(w) = try_graph(g, &mut examined) {
                found = Some(w);
                break;
            }
        }
    }

    SearchResult {
        goal: cfg.goal.to_string(),
        found,
        graphs_examined: examined,
        budget_spent: start.elapsed(),
    }
}

fn memo_key(g: &Graph) -> (Vec<usize>, Vec<u16>) {
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let d = g.distances();
    let mut dists: Vec<u16> = g
        .vertices()
        .flat_map(|u| (u + 1..g.n()).map(move |v| d.get(u, v)))
        .collect();
    dists.sort_unstable();
    (degrees, dists)
}

/// Lazily enumerates connected labeled graphs on `n` vertices.
struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
}

impl ConnectedGraphs {
    fn new(n: usize) -> Self {
        let pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        ConnectedGraphs {
            n,
            pairs,
            next_mask: 0,
        }
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let end = 1u64 << self.pairs.len();
        while self.next_mask < end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let edges: Vec<_> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if let Ok(g) = Graph::new(self.n, &edges) {
                return Some(g);
            }
        }
        None
    }
}

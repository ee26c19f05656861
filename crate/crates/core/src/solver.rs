//! Exact minimum-cardinality search for the five set invariants.
//!
//! The search walks cardinalities upward from a certified lower bound and,
//! for each size `k`, enumerates `k`-subsets in lexicographic order with an
//! include-first depth-first search. The first feasible subset is therefore
//! the lexicographically least minimum witness.
//!
//! Every invariant except domination alone implies resolution, and all of
//! them except `psi` are pure hitting-set problems:
//!
//! * dominating: `S` meets `N[w]` for every vertex `w`;
//! * resolving: `S` meets `R(x,y) = {u : d(u,x) != d(u,y)}` for every pair;
//! * LD: dominating, and `S` meets `{x,y} ∪ (N(x) △ N(y))` for every pair.
//!
//! A constraint is checked as soon as its largest vertex has been decided.
//! For distance twins `R(x,y) = {x,y}`, so the forcing rule "all but at most
//! one vertex of each twin class" falls out of the pair constraints. Doubly
//! resolving sets are resolving, so `psi` uses the resolution constraints for
//! pruning and tests double resolution on complete candidates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Girth, Graph};
use crate::vertex_set::VertexSet;

/// Largest graph the mask-based search accepts.
pub const MAX_SOLVER_VERTICES: usize = 64;

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    /// Domination number.
    Gamma,
    /// Metric dimension.
    Dim,
    /// Metric-location-domination number.
    GammaM,
    /// Location-domination number.
    GammaL,
    /// Minimum size of a doubly resolving set.
    Psi,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::Gamma,
        Invariant::Dim,
        Invariant::GammaM,
        Invariant::GammaL,
        Invariant::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::Dim => "dim",
            Invariant::GammaM => "gammaM",
            Invariant::GammaL => "gammaL",
            Invariant::Psi => "psi",
        }
    }

    fn dominating(self) -> bool {
        matches!(
            self,
            Invariant::Gamma | Invariant::GammaM | Invariant::GammaL
        )
    }

    fn resolving(self) -> bool {
        !matches!(self, Invariant::Gamma)
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown invariant `{s}` (expected gamma, dim, gammaM, gammaL or psi)")
            })
    }
}

impl Serialize for Invariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum SolveError {
    #[error("exact search supports at most {MAX_SOLVER_VERTICES} vertices, graph has {0}")]
    TooLarge(usize),
    #[error(
        "Timeout: {invariant} search exceeded its budget; best known upper bound {upper_bound}"
    )]
    Timeout {
        invariant: Invariant,
        upper_bound: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: VertexSet,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Wall-clock budget per invariant.
    pub budget: Duration,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

pub fn solve(g: &Graph, which: Invariant) -> Result<InvariantResult, SolveError> {
    solve_with(g, which, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    which: Invariant,
    opts: &SolveOptions,
) -> Result<InvariantResult, SolveError> {
    let n = g.n();
    if n > MAX_SOLVER_VERTICES {
        return Err(SolveError::TooLarge(n));
    }
    let start = Instant::now();
    let deadline = start + opts.budget;
    let ctx = Context::new(g, which);
    for k in lower_bound_prune(g, which)..=n {
        let mut search = Search {
            ctx: &ctx,
            k,
            deadline,
            nodes: 0,
            timed_out: false,
        };
        let found = search.run(0, 0, 0);
        if search.timed_out {
            return Err(SolveError::Timeout {
                invariant: which,
                upper_bound: n,
            });
        }
        if let Some(mask) = found {
            return Ok(InvariantResult {
                invariant: which,
                value: k,
                witness: VertexSet::from_mask(n, mask),
                elapsed: start.elapsed(),
            });
        }
    }
    unreachable!("the full vertex set satisfies every predicate")
}

/// Groups of mutual distance twins: `x` and `y` are twins when
/// `d(x,w) = d(y,w)` for every `w` other than `x` and `y`. Classes are
/// sorted, and listed by their smallest vertex.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let d = g.distances();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[x] = Some(id);
        let mut class = vec![x];
        for (y, slot) in class_of.iter_mut().enumerate().skip(x + 1) {
            if slot.is_none() && are_twins(d, x, y) {
                *slot = Some(id);
                class.push(y);
            }
        }
        classes.push(class);
    }
    classes
}

fn are_twins(d: &DistanceMatrix, x: usize, y: usize) -> bool {
    (0..d.n()).all(|w| w == x || w == y || d.get(x, w) == d.get(y, w))
}

/// A certified lower bound used as the first cardinality tried.
///
/// Resolving-type invariants need all but one vertex of every twin class;
/// dominating ones need at least `ceil(n / (Δ + 1))` vertices.
pub fn lower_bound_prune(g: &Graph, which: Invariant) -> usize {
    let twin_bound: usize = twin_classes(g).iter().map(|c| c.len() - 1).sum();
    let dom_bound = g.n().div_ceil(g.max_degree() + 1);
    let mut bound = 1;
    if which.resolving() {
        bound = bound.max(twin_bound);
    }
    if which.dominating() {
        bound = bound.max(dom_bound);
    }
    if which == Invariant::Psi {
        // one vertex never doubly resolves anything
        bound = bound.max(2);
    }
    bound
}

struct Context<'a> {
    n: usize,
    which: Invariant,
    dist: &'a DistanceMatrix,
    /// `by_deadline[v]`: constraint masks whose largest vertex is `v`.
    by_deadline: Vec<Vec<u64>>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, which: Invariant) -> Self {
        let n = g.n();
        let d = g.distances();
        let nbr: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let mut constraints = Vec::new();
        if which.dominating() {
            constraints.extend((0..n).map(|v| nbr[v] | 1 << v));
        }
        for x in 0..n {
            for y in x + 1..n {
                if which.resolving() {
                    let resolvers = (0..n)
                        .filter(|&u| d.get(u, x) != d.get(u, y))
                        .fold(0u64, |m, u| m | 1 << u);
                    constraints.push(resolvers);
                }
                if which == Invariant::GammaL {
                    constraints.push(1 << x | 1 << y | (nbr[x] ^ nbr[y]));
                }
            }
        }
        constraints.sort_unstable();
        constraints.dedup();
        let mut by_deadline = vec![Vec::new(); n];
        for c in constraints {
            by_deadline[63 - c.leading_zeros() as usize].push(c);
        }
        Context {
            n,
            which,
            dist: d,
            by_deadline,
        }
    }

    fn doubly_resolving(&self, mask: u64) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&u| mask >> u & 1 == 1).collect();
        let d = self.dist;
        (0..self.n).all(|x| {
            (x + 1..self.n).all(|y| {
                let first = d.get(members[0], x) as i32 - d.get(members[0], y) as i32;
                members[1..]
                    .iter()
                    .any(|&u| d.get(u, x) as i32 - d.get(u, y) as i32 != first)
            })
        })
    }
}

struct Search<'c, 'a> {
    ctx: &'c Context<'a>,
    k: usize,
    deadline: Instant,
    nodes: u64,
    timed_out: bool,
}

impl Search<'_, '_> {
    /// Decides vertices `v..n` given `mask` (with `count` members) over `0..v`.
    fn run(&mut self, v: usize, mask: u64, count: usize) -> Option<u64> {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return None;
        }
        let n = self.ctx.n;
        if count == self.k {
            // every remaining vertex is excluded
            let ok = self.ctx.by_deadline[v..]
                .iter()
                .flatten()
                .all(|&c| c & mask != 0);
            let ok = ok && (self.ctx.which != Invariant::Psi || self.ctx.doubly_resolving(mask));
            return ok.then_some(mask);
        }
        if n - v < self.k - count {
            return None;
        }
        // Constraints ending at v contain v, so including v satisfies them.
        if let Some(found) = self.run(v + 1, mask | 1 << v, count + 1) {
            return Some(found);
        }
        if self.ctx.by_deadline[v].iter().all(|&c| c & mask != 0) {
            return self.run(v + 1, mask, count);
        }
        None
    }
}

/// All five invariants of one graph plus its structural flags.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub is_tree: bool,
    pub c4_c6_free: bool,
    pub results: BTreeMap<Invariant, Result<InvariantResult, SolveError>>,
}

impl InvariantReport {
    /// The solved value, if the search finished.
    pub fn value(&self, which: Invariant) -> Option<usize> {
        self.results.get(&which)?.as_ref().ok().map(|r| r.value)
    }

    pub fn witness(&self, which: Invariant) -> Option<&VertexSet> {
        self.results.get(&which)?.as_ref().ok().map(|r| &r.witness)
    }

    /// `(gamma, dim, gammaM, gammaL, psi)` when every search finished.
    pub fn values(&self) -> Option<InvariantValues> {
        Some(InvariantValues {
            gamma: self.value(Invariant::Gamma)?,
            dim: self.value(Invariant::Dim)?,
            gamma_m: self.value(Invariant::GammaM)?,
            gamma_l: self.value(Invariant::GammaL)?,
            psi: self.value(Invariant::Psi)?,
        })
    }

    pub fn timeouts(&self) -> Vec<&SolveError> {
        self.results
            .values()
            .filter_map(|r| r.as_ref().err())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantValues {
    pub gamma: usize,
    pub dim: usize,
    #[serde(rename = "gammaM")]
    pub gamma_m: usize,
    #[serde(rename = "gammaL")]
    pub gamma_l: usize,
    pub psi: usize,
}

pub fn solve_all(g: &Graph) -> InvariantReport {
    solve_all_with(g, &SolveOptions::default())
}

pub fn solve_all_with(g: &Graph, opts: &SolveOptions) -> InvariantReport {
    InvariantReport {
        n: g.n(),
        m: g.edge_count(),
        girth: g.girth(),
        is_tree: g.is_tree(),
        c4_c6_free: !g.has_c4_or_c6_subgraph(),
        results: Invariant::ALL
            .into_iter()
            .map(|i| (i, solve_with(g, i, opts)))
            .collect(),
    }
}

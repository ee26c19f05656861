//! Decision procedures for the vertex-set properties studied here:
//! dominating, resolving, metric-locating-dominating (MLD),
//! locating-dominating (LD) and doubly resolving sets.
//!
//! Every predicate returns a [`Verdict`]. A failing verdict carries the
//! lexicographically first offending vertex or pair, so repeated runs always
//! report the same certificate.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("the vertex set is empty")]
    EmptySet,
    #[error("a doubly resolving set needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("degenerate pair: u and v (or x and y) coincide")]
    DegeneratePair,
    #[error("vertex set is over {set} vertices but the graph has {graph}")]
    UniverseMismatch { set: usize, graph: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureKind {
    NotDominating,
    NotResolving,
    NeighborhoodClash,
    NotDoublyResolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vertex(usize),
    /// Unordered pair stored with the smaller vertex first.
    Pair(usize, usize),
}

impl Witness {
    fn pair(x: usize, y: usize) -> Self {
        Witness::Pair(x.min(y), x.max(y))
    }
}

/// Why a vertex set fails a predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResolutionFailure {
    pub kind: FailureKind,
    pub witness: Witness,
}

impl fmt::Display for ResolutionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            Witness::Vertex(v) => write!(f, "{:?} at vertex {v}", self.kind),
            Witness::Pair(x, y) => write!(f, "{:?} at pair {{{x},{y}}}", self.kind),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(ResolutionFailure),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn failure(&self) -> Option<&ResolutionFailure> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(f) => Some(f),
        }
    }

    fn fail(kind: FailureKind, witness: Witness) -> Self {
        Verdict::Fails(ResolutionFailure { kind, witness })
    }
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<(), PredicateError> {
    if s.universe() != g.n() {
        return Err(PredicateError::UniverseMismatch {
            set: s.universe(),
            graph: g.n(),
        });
    }
    Ok(())
}

fn nonempty(g: &Graph, s: &VertexSet) -> Result<(), PredicateError> {
    check_universe(g, s)?;
    if s.is_empty() {
        return Err(PredicateError::EmptySet);
    }
    Ok(())
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Verdict {
    debug_assert_eq!(s.universe(), g.n());
    for x in g.vertices() {
        if !s.contains(x) && !g.neighbors(x).iter().any(|&u| s.contains(u)) {
            return Verdict::fail(FailureKind::NotDominating, Witness::Vertex(x));
        }
    }
    Verdict::Holds
}

/// Every vertex gets a distinct vector of distances to `s`.
pub fn is_resolving(g: &Graph, s: &VertexSet) -> Result<Verdict, PredicateError> {
    nonempty(g, s)?;
    let d = g.distances();
    let members = s.to_vec();
    let mut classes: HashMap<Vec<u16>, Vec<usize>> = HashMap::new();
    for x in g.vertices() {
        let key = members.iter().map(|&u| d.get(u, x)).collect();
        classes.entry(key).or_default().push(x);
    }
    // Vertices are pushed in increasing order, so each class is sorted and
    // the lexicographically first clash is the least (first, second) pair.
    let clash = classes
        .values()
        .filter(|c| c.len() > 1)
        .map(|c| (c[0], c[1]))
        .min();
    Ok(match clash {
        Some((x, y)) => Verdict::fail(FailureKind::NotResolving, Witness::pair(x, y)),
        None => Verdict::Holds,
    })
}

/// Dominating and resolving.
pub fn is_mld(g: &Graph, s: &VertexSet) -> Result<Verdict, PredicateError> {
    nonempty(g, s)?;
    match is_dominating(g, s) {
        Verdict::Holds => is_resolving(g, s),
        fail => Ok(fail),
    }
}

/// Dominating, with pairwise distinct traces `N(x) ∩ S` over the vertices
/// outside `S`.
pub fn is_ld(g: &Graph, s: &VertexSet) -> Result<Verdict, PredicateError> {
    nonempty(g, s)?;
    if let fail @ Verdict::Fails(_) = is_dominating(g, s) {
        return Ok(fail);
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut clash: Option<(usize, usize)> = None;
    for x in g.vertices().filter(|&x| !s.contains(x)) {
        let trace: Vec<usize> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&u| s.contains(u))
            .collect();
        match seen.get(&trace) {
            Some(&first) => {
                if clash.is_none_or(|c| (first, x) < c) {
                    clash = Some((first, x));
                }
            }
            None => {
                seen.insert(trace, x);
            }
        }
    }
    Ok(match clash {
        Some((x, y)) => Verdict::fail(FailureKind::NeighborhoodClash, Witness::pair(x, y)),
        None => Verdict::Holds,
    })
}

/// Whether `u` and `v` doubly resolve `{x, y}`:
/// `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
pub fn doubly_resolves(
    d: &DistanceMatrix,
    u: usize,
    v: usize,
    x: usize,
    y: usize,
) -> Result<bool, PredicateError> {
    if u == v || x == y {
        return Err(PredicateError::DegeneratePair);
    }
    Ok(difference(d, u, x, y) != difference(d, v, x, y))
}

#[inline]
pub(crate) fn difference(d: &DistanceMatrix, u: usize, x: usize, y: usize) -> i32 {
    d.get(u, x) as i32 - d.get(u, y) as i32
}

/// Whether some two members of `s` doubly resolve `{x, y}`, i.e. the map
/// `u -> d(u,x) - d(u,y)` is not constant on `s`.
pub fn set_doubly_resolves_pair(d: &DistanceMatrix, s: &VertexSet, x: usize, y: usize) -> bool {
    let mut diffs = s.iter().map(|u| difference(d, u, x, y));
    match diffs.next() {
        Some(first) => diffs.any(|v| v != first),
        None => false,
    }
}

pub fn is_doubly_resolving(g: &Graph, s: &VertexSet) -> Result<Verdict, PredicateError> {
    check_universe(g, s)?;
    if s.len() < 2 {
        return Err(PredicateError::TooSmall(s.len()));
    }
    let d = g.distances();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if !set_doubly_resolves_pair(d, s, x, y) {
                return Ok(Verdict::fail(
                    FailureKind::NotDoublyResolved,
                    Witness::Pair(x, y),
                ));
            }
        }
    }
    Ok(Verdict::Holds)
}

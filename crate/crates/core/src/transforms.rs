//! Constructive set transformations, each returning a certified output:
//!
//! * [`pi_closure`]: an MLD-set of a graph without 4- or 6-cycles, closed
//!   under the inner pairs of its length-3 paths, becomes an LD-set of size at
//!   most `|S|^2`;
//! * [`bar_s`]: in a graph of girth at least 5, swapping each MLD-set member
//!   for its private pendant neighbor gives a doubly resolving set of the same
//!   size;
//! * [`union_repair`]: in any graph, a minimum MLD-set united with a minimum
//!   dominating set, plus one repair vertex per unresolved pair, gives a
//!   doubly resolving set of size at most `γ_M + γ`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::predicates::{self, set_doubly_resolves_pair, PredicateError, ResolutionFailure};
use crate::solver::{self, Invariant, SolveError, SolveOptions};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("PreconditionC4C6: the graph contains a 4-cycle or a 6-cycle")]
    PreconditionC4C6,
    #[error("PreconditionGirth: the graph has girth {0}, below 5")]
    PreconditionGirth(u32),
    #[error("IsP2: the transformation does not apply to P_2")]
    IsP2,
    #[error("NotMLD: input set is not metric-locating-dominating ({0})")]
    NotMld(ResolutionFailure),
    #[error("AmbiguousPath: two length-3 paths join {u} and {v}")]
    AmbiguousPath { u: usize, v: usize },
    #[error("TwoPendants: vertex {0} has two pendant neighbors outside the set")]
    TwoPendants(usize),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Serialize)]
pub struct TransformOutcome {
    pub input_set: VertexSet,
    pub output_set: VertexSet,
    /// The output passed its target predicate.
    pub certified: bool,
    /// The output respects the transformation's size bound.
    pub size_bound_ok: bool,
    pub size_bound: usize,
}

fn require_mld(g: &Graph, s: &VertexSet) -> Result<(), TransformError> {
    match predicates::is_mld(g, s)?.failure() {
        Some(f) => Err(TransformError::NotMld(*f)),
        None => Ok(()),
    }
}

/// Inner pairs `{u', v'}` of every length-3 path `u - u' - v' - v`, sorted
/// and deduplicated.
pub fn pi_pairs(g: &Graph, u: usize, v: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for &a in g.neighbors(u) {
        if a == v {
            continue;
        }
        for &b in g.neighbors(a) {
            if b != u && b != v && g.is_adjacent(b, v) {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// The inner pair of the length-3 path from `u` to `v`, when there is
/// exactly one such pair.
///
/// Without 4- and 6-cycles this path is unique when `d(u,v) = 3`, but not
/// in general: two triangles sharing a vertex carry two length-3 paths
/// between their far corners.
pub fn pi_pair(g: &Graph, u: usize, v: usize) -> Result<Option<(usize, usize)>, TransformError> {
    match pi_pairs(g, u, v)[..] {
        [] => Ok(None),
        [p] => Ok(Some(p)),
        _ => Err(TransformError::AmbiguousPath { u, v }),
    }
}

/// `S ∪ π(S)`, certified as an LD-set.
///
/// Inner path vertices may already belong to `S`; the union absorbs them.
/// When two members are joined by several length-3 paths (possible through
/// triangles), the lexicographically least inner pair is taken, which keeps
/// the `|S|^2` size bound.
pub fn pi_closure(g: &Graph, s: &VertexSet) -> Result<TransformOutcome, TransformError> {
    if g.has_c4_or_c6_subgraph() {
        return Err(TransformError::PreconditionC4C6);
    }
    require_mld(g, s)?;
    let members = s.to_vec();
    let mut out = s.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if let Some(&(a, b)) = pi_pairs(g, u, v).first() {
                out.insert(a);
                out.insert(b);
            }
        }
    }
    let size_bound = s.len() * s.len();
    Ok(TransformOutcome {
        certified: predicates::is_ld(g, &out)?.holds(),
        size_bound_ok: out.len() <= size_bound,
        size_bound,
        input_set: s.clone(),
        output_set: out,
    })
}

/// Each `u ∈ S` is replaced by its unique degree-1 neighbor outside `S`
/// when there is one; the result is certified as doubly resolving.
pub fn bar_s(g: &Graph, s: &VertexSet) -> Result<TransformOutcome, TransformError> {
    if let crate::graph::Girth::Finite(girth) = g.girth() {
        if girth < 5 {
            return Err(TransformError::PreconditionGirth(girth));
        }
    }
    if g.n() == 2 {
        return Err(TransformError::IsP2);
    }
    require_mld(g, s)?;
    let mut out = VertexSet::empty(g.n());
    for u in s.iter() {
        let mut pendants = g
            .neighbors(u)
            .iter()
            .filter(|&&w| !s.contains(w) && g.degree(w) == 1);
        let bar = match (pendants.next(), pendants.next()) {
            (Some(_), Some(_)) => return Err(TransformError::TwoPendants(u)),
            (Some(&w), None) => w,
            _ => u,
        };
        out.insert(bar);
    }
    let certified = out.len() >= 2 && predicates::is_doubly_resolving(g, &out)?.holds();
    Ok(TransformOutcome {
        certified,
        size_bound_ok: out.len() == s.len(),
        size_bound: s.len(),
        input_set: s.clone(),
        output_set: out,
    })
}

/// Detailed result of [`union_repair`].
#[derive(Debug, Clone, Serialize)]
pub struct UnionRepair {
    pub mld_set: VertexSet,
    pub dominating_set: VertexSet,
    /// Vertices added to `S_1 ∪ S_2` to repair undoubly-resolved pairs.
    pub repairs: VertexSet,
    pub outcome: TransformOutcome,
}

pub fn union_repair(g: &Graph) -> Result<TransformOutcome, TransformError> {
    union_repair_with(g, &SolveOptions::default()).map(|r| r.outcome)
}

pub fn union_repair_with(g: &Graph, opts: &SolveOptions) -> Result<UnionRepair, TransformError> {
    let s1 = solver::solve_with(g, Invariant::GammaM, opts)?.witness;
    let s2 = solver::solve_with(g, Invariant::Gamma, opts)?.witness;
    Ok(union_repair_from(g, &s1, &s2))
}

/// Repairs `S = S_1 ∪ S_2` for a given MLD-set `S_1` and dominating set
/// `S_2`: every `y ∉ S` such that `{x, y}` is not doubly resolved by `S` for
/// some `x ∈ S_1 ∩ S_2` joins the output.
pub fn union_repair_from(g: &Graph, s1: &VertexSet, s2: &VertexSet) -> UnionRepair {
    let d = g.distances();
    let s = s1.union(s2);
    let common = s1.intersection(s2);
    let mut repairs = VertexSet::empty(g.n());
    for y in s.complement().iter() {
        if common
            .iter()
            .any(|x| !set_doubly_resolves_pair(d, &s, x, y))
        {
            repairs.insert(y);
        }
    }
    let out = s.union(&repairs);
    let size_bound = s1.len() + s2.len();
    let certified =
        out.len() >= 2 && matches!(predicates::is_doubly_resolving(g, &out), Ok(v) if v.holds());
    UnionRepair {
        mld_set: s1.clone(),
        dominating_set: s2.clone(),
        repairs,
        outcome: TransformOutcome {
            certified,
            size_bound_ok: out.len() <= s.len() + common.len() && out.len() <= size_bound,
            size_bound,
            input_set: s,
            output_set: out,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &edges)
    }

    fn set(g: &Graph, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(g.n(), v).unwrap()
    }

    #[test]
    fn pi_closure_on_p4() {
        let g = path(4);
        let out = pi_closure(&g, &set(&g, &[0, 3])).unwrap();
        assert_eq!(out.output_set.to_vec(), vec![0, 1, 2, 3]);
        assert!(out.certified && out.size_bound_ok);
    }

    #[test]
    fn bowtie_has_two_inner_pairs() {
        let g = graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert!(!g.has_c4_or_c6_subgraph());
        assert_eq!(pi_pairs(&g, 0, 3), vec![(1, 2), (2, 4)]);
        assert!(matches!(
            pi_pair(&g, 0, 3),
            Err(TransformError::AmbiguousPath { u: 0, v: 3 })
        ));
        let out = pi_closure(&g, &set(&g, &[1, 3])).unwrap();
        assert!(out.certified && out.size_bound_ok);
    }

    #[test]
    fn pi_closure_preconditions() {
        let c4 = cycle(4);
        assert_eq!(
            pi_closure(&c4, &set(&c4, &[0, 1])).unwrap_err(),
            TransformError::PreconditionC4C6
        );
        let p4 = path(4);
        assert!(matches!(
            pi_closure(&p4, &set(&p4, &[0])),
            Err(TransformError::NotMld(_))
        ));
    }

    #[test]
    fn bar_s_on_p6() {
        let g = path(6);
        let out = bar_s(&g, &set(&g, &[1, 4])).unwrap();
        assert_eq!(out.output_set.to_vec(), vec![0, 5]);
        assert!(out.certified && out.size_bound_ok);
    }

    #[test]
    fn bar_s_preconditions() {
        let c4 = cycle(4);
        assert_eq!(
            bar_s(&c4, &set(&c4, &[0, 1])).unwrap_err(),
            TransformError::PreconditionGirth(4)
        );
        let p2 = path(2);
        assert_eq!(
            bar_s(&p2, &set(&p2, &[0])).unwrap_err(),
            TransformError::IsP2
        );
    }

    #[test]
    fn union_repair_small_graphs() {
        let out = union_repair(&path(2)).unwrap();
        assert_eq!(out.output_set.to_vec(), vec![0, 1]);
        assert!(out.certified && out.size_bound_ok);

        let c5 = cycle(5);
        let out = union_repair(&c5).unwrap();
        assert!(out.certified && out.size_bound_ok);
    }
}

use serde::Serialize;

use super::HarnessError;
use crate::graph::Graph;
use crate::predicates::{self, difference, set_doubly_resolves_pair};
use crate::solver::{self, Invariant, InvariantReport, SolveError};
use crate::transforms;
use crate::tree;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub holds: bool,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &'static str) -> Self {
        SuiteOutcome {
            suite,
            holds: true,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.holds = false;
            self.failures.push(msg());
        }
    }
}

fn witness(report: &InvariantReport, which: Invariant) -> Result<&VertexSet, HarnessError> {
    match report.results.get(&which) {
        Some(Ok(r)) => Ok(&r.witness),
        Some(Err(e)) => Err(e.clone().into()),
        None => Err(SolveError::TooLarge(report.n).into()),
    }
}

fn value(report: &InvariantReport, which: Invariant) -> Result<usize, HarnessError> {
    witness(report, which).map(VertexSet::len)
}

/// Double-resolution behavior of the solver's minimum MLD-set.
pub fn lemma_suite(g: &Graph) -> Result<SuiteOutcome, HarnessError> {
    let s = solver::solve(g, Invariant::GammaM)?.witness;
    Ok(lemma_suite_for(g, &s))
}

/// For an MLD-set `S`:
///
/// * every pair outside `S` is doubly resolved by `S`;
/// * if `{u, x}` with `u ∈ S`, `x ∉ S` is not doubly resolved, then
///   `N(x) ∩ S = {u}` and no other outside vertex fails together with `u`;
/// * every pair inside `S` is doubly resolved by its own two vertices.
pub fn lemma_suite_for(g: &Graph, s: &VertexSet) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("mld_double_resolution");
    let d = g.distances();
    let outside = s.complement().to_vec();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            out.check(set_doubly_resolves_pair(d, s, x, y), || {
                format!("outside pair {{{x},{y}}} not doubly resolved")
            });
        }
    }
    for u in s.iter() {
        let unresolved: Vec<usize> = outside
            .iter()
            .copied()
            .filter(|&x| !set_doubly_resolves_pair(d, s, u, x))
            .collect();
        for &x in &unresolved {
            let trace: Vec<usize> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&w| s.contains(w))
                .collect();
            out.check(trace == [u], || {
                format!("N({x}) ∩ S = {trace:?}, expected [{u}]")
            });
        }
        out.check(unresolved.len() <= 1, || {
            format!("{u} fails with several outside vertices {unresolved:?}")
        });
    }
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.check(
                predicates::doubly_resolves(d, u, v, u, v) == Ok(true),
                || format!("inside pair {{{u},{v}}} not doubly resolved by itself"),
            );
        }
    }
    out
}

pub fn transform_suite(g: &Graph) -> Result<SuiteOutcome, HarnessError> {
    transform_suite_with(g, &solver::solve_all(g))
}

/// Applies the LD closure (no 4- or 6-cycles) and the pendant swap (girth at
/// least 5) to the minimum MLD witness and certifies outputs and bounds.
pub fn transform_suite_with(
    g: &Graph,
    report: &InvariantReport,
) -> Result<SuiteOutcome, HarnessError> {
    let closure_applies = report.c4_c6_free;
    let swap_applies = report.girth.at_least(5) && g.n() > 2;
    if !closure_applies && !swap_applies {
        return Err(HarnessError::NoApplicableTransform);
    }
    let mut out = SuiteOutcome::new("transforms");
    let s = witness(report, Invariant::GammaM)?;
    let gamma_m = s.len();
    if closure_applies {
        let gamma_l = value(report, Invariant::GammaL)?;
        let r = transforms::pi_closure(g, s)?;
        out.check(r.certified, || {
            format!("closure {} is not an LD-set", r.output_set)
        });
        out.check(r.size_bound_ok, || {
            format!(
                "closure has {} > {} vertices",
                r.output_set.len(),
                r.size_bound
            )
        });
        out.check(gamma_l <= gamma_m * gamma_m, || {
            format!("gammaL {gamma_l} > gammaM^2 = {}", gamma_m * gamma_m)
        });
    }
    if swap_applies {
        let psi = value(report, Invariant::Psi)?;
        let r = transforms::bar_s(g, s)?;
        out.check(r.certified, || {
            format!("swapped set {} is not doubly resolving", r.output_set)
        });
        out.check(r.size_bound_ok, || {
            format!(
                "swapped set has {} != {} vertices",
                r.output_set.len(),
                gamma_m
            )
        });
        out.check(psi <= gamma_m, || format!("psi {psi} > gammaM {gamma_m}"));
        check_pendant_shift(g, s, &mut out);
    }
    Ok(out)
}

/// Moving from `u` to its pendant neighbor `w` shifts every distance by one:
/// `d(w,x) - d(w,y) = d(u,x) - d(u,y)` for all `x, y != w`.
fn check_pendant_shift(g: &Graph, s: &VertexSet, out: &mut SuiteOutcome) {
    let d = g.distances();
    for u in s.iter() {
        for &w in g.neighbors(u) {
            if s.contains(w) || g.degree(w) != 1 {
                continue;
            }
            for x in g.vertices().filter(|&x| x != w) {
                for y in g.vertices().filter(|&y| y != w && y != x) {
                    out.check(difference(d, w, x, y) == difference(d, u, x, y), || {
                        format!("distance shift fails for pendant {w} of {u} at ({x},{y})")
                    });
                }
            }
        }
    }
}

/// `ψ <= γ_M + γ`, and the repaired union is a certified doubly resolving
/// set within that size.
pub fn union_suite(g: &Graph, report: &InvariantReport) -> Result<SuiteOutcome, HarnessError> {
    let s1 = witness(report, Invariant::GammaM)?;
    let s2 = witness(report, Invariant::Gamma)?;
    let psi = value(report, Invariant::Psi)?;
    let r = transforms::union_repair_from(g, s1, s2);
    let mut out = SuiteOutcome::new("union_repair");
    let bound = s1.len() + s2.len();
    out.check(r.outcome.certified, || {
        format!(
            "repaired set {} is not doubly resolving",
            r.outcome.output_set
        )
    });
    out.check(r.outcome.size_bound_ok, || {
        format!(
            "repaired set has {} > {bound} vertices",
            r.outcome.output_set.len()
        )
    });
    out.check(r.repairs.len() <= s1.intersection(s2).len(), || {
        "more repairs than |S1 ∩ S2|".to_string()
    });
    out.check(psi <= bound, || {
        format!("psi {psi} > gammaM + gamma = {bound}")
    });
    Ok(out)
}

/// Tree formulas against solver values, and both characterizations.
pub fn tree_suite(t: &Graph, report: &InvariantReport) -> Result<SuiteOutcome, HarnessError> {
    let p = tree::profile(t)?;
    let gamma = value(report, Invariant::Gamma)?;
    let gamma_m = value(report, Invariant::GammaM)?;
    let dim = value(report, Invariant::Dim)?;
    let mut out = SuiteOutcome::new("tree");

    let gamma_dp = tree::gamma_tree(t)?;
    out.check(gamma_dp == gamma, || {
        format!("tree DP gamma {gamma_dp} != solver {gamma}")
    });
    let formula = tree::gamma_m_tree(t)?;
    out.check(formula == gamma_m, || {
        format!("gammaM formula {formula} != solver {gamma_m}")
    });
    let (dim_formula, dim_witness) = tree::dim_tree(t)?;
    out.check(dim_formula == dim, || {
        format!("dim formula {dim_formula} != solver {dim}")
    });
    out.check(dim_witness.len() == dim_formula, || {
        "dim witness has the wrong size".to_string()
    });
    out.check(
        matches!(predicates::is_resolving(t, &dim_witness), Ok(v) if v.holds()),
        || format!("canonical dim witness {dim_witness} is not resolving"),
    );
    out.check((gamma_m == gamma) == p.strong_supports.is_empty(), || {
        format!(
            "gammaM = gamma is {} but strong supports = {}",
            gamma_m == gamma,
            p.strong_supports
        )
    });
    out.check(p.ell() > dim, || format!("leaves {} <= dim {dim}", p.ell()));
    if !p.is_path {
        let v = tree::characterize_mld_dim_gamma(t)?;
        out.check(v.all_equal, || {
            format!(
                "four-way characterization disagrees: {:?}",
                v.statement_flags
            )
        });
        out.check(v.statement_flags[0] == (gamma_m == dim + gamma), || {
            "first statement disagrees with solver values".to_string()
        });
    }
    if t.n() > 2 {
        let v = tree::characterize_mld_leaves(t)?;
        out.check(v.all_equal, || {
            format!(
                "three-way characterization disagrees: {:?}",
                v.statement_flags
            )
        });
        out.check(v.statement_flags[0] == (gamma_m == p.ell()), || {
            "first statement disagrees with solver values".to_string()
        });
    }
    Ok(out)
}

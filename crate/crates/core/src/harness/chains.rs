use std::collections::BTreeMap;

use serde::Serialize;

use super::HarnessError;
use crate::graph::Graph;
use crate::solver::{self, InvariantReport, InvariantValues};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainId {
    /// `max(dim, γ) <= γ_M <= dim + γ`
    MldSandwich,
    /// `dim <= γ_M <= γ_L`
    DimMldLd,
    /// `dim <= ψ`
    DimPsi,
    /// Trees: `max(ℓ, γ) <= γ_M <= dim + γ`
    TreeLeafSandwich,
    /// Girth at least 5: `dim <= ψ <= γ_M <= γ_L`
    Girth5Chain,
    /// `dim <= ψ <= 2γ_M <= 2γ_L`
    PsiTwiceMld,
    /// `ψ <= γ_M + γ`
    PsiMldPlusGamma,
    /// Trees: `γ_L < 2γ_M`
    TreeLdBelowTwiceMld,
    /// Conjectured: `ψ <= dim + γ`
    PsiDimPlusGamma,
    /// The `G_s` family: `γ_L >= 2^(γ_M - 2) - 1`
    LdExponentialGap,
}

impl ChainId {
    pub fn name(self) -> &'static str {
        match self {
            ChainId::MldSandwich => "mld_sandwich",
            ChainId::DimMldLd => "dim_mld_ld",
            ChainId::DimPsi => "dim_psi",
            ChainId::TreeLeafSandwich => "tree_leaf_sandwich",
            ChainId::Girth5Chain => "girth5_chain",
            ChainId::PsiTwiceMld => "psi_twice_mld",
            ChainId::PsiMldPlusGamma => "psi_mld_plus_gamma",
            ChainId::TreeLdBelowTwiceMld => "tree_ld_below_twice_mld",
            ChainId::PsiDimPlusGamma => "psi_dim_plus_gamma",
            ChainId::LdExponentialGap => "ld_exponential_gap",
        }
    }

    /// Conjectured rather than proven; failures are findings, not bugs.
    pub fn is_conjecture(self) -> bool {
        self == ChainId::PsiDimPlusGamma
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainVerdict {
    pub chain: ChainId,
    pub holds: bool,
    pub values: BTreeMap<&'static str, usize>,
    pub graph_id: String,
}

fn verdict(
    chain: ChainId,
    holds: bool,
    values: &[(&'static str, usize)],
    graph_id: &str,
) -> ChainVerdict {
    ChainVerdict {
        chain,
        holds,
        values: values.iter().copied().collect(),
        graph_id: graph_id.to_string(),
    }
}

/// Solves every invariant of `g` and evaluates the applicable chains.
pub fn run_chains(g: &Graph) -> Result<Vec<ChainVerdict>, HarnessError> {
    let report = solver::solve_all(g);
    if let Some(err) = report.timeouts().first() {
        return Err((*err).clone().into());
    }
    Ok(chains_from_report(g, &report, ""))
}

/// Chains evaluable from a report; empty when a search timed out.
///
/// The general chains apply to every graph; the two tree chains are added
/// for trees and the girth-5 chain when the girth is at least 5. `P_2` is
/// excluded from the leaf sandwich and the girth-5 chain: it has two leaves
/// and `ψ = 2` against `γ_M = 1`.
pub fn chains_from_report(
    g: &Graph,
    report: &InvariantReport,
    graph_id: &str,
) -> Vec<ChainVerdict> {
    let Some(InvariantValues {
        gamma,
        dim,
        gamma_m,
        gamma_l,
        psi,
    }) = report.values()
    else {
        return Vec::new();
    };
    let all = [
        ("dim", dim),
        ("gamma", gamma),
        ("gammaM", gamma_m),
        ("gammaL", gamma_l),
        ("psi", psi),
    ];
    let pick = |names: &[&str]| -> Vec<(&'static str, usize)> {
        all.iter()
            .filter(|(k, _)| names.contains(k))
            .copied()
            .collect()
    };
    let mut out = vec![
        verdict(
            ChainId::MldSandwich,
            dim.max(gamma) <= gamma_m && gamma_m <= dim + gamma,
            &pick(&["dim", "gamma", "gammaM"]),
            graph_id,
        ),
        verdict(
            ChainId::DimMldLd,
            dim <= gamma_m && gamma_m <= gamma_l,
            &pick(&["dim", "gammaM", "gammaL"]),
            graph_id,
        ),
        verdict(
            ChainId::DimPsi,
            dim <= psi,
            &pick(&["dim", "psi"]),
            graph_id,
        ),
        verdict(
            ChainId::PsiTwiceMld,
            dim <= psi && psi <= 2 * gamma_m && gamma_m <= gamma_l,
            &pick(&["dim", "psi", "gammaM", "gammaL"]),
            graph_id,
        ),
        verdict(
            ChainId::PsiMldPlusGamma,
            psi <= gamma_m + gamma,
            &pick(&["psi", "gammaM", "gamma"]),
            graph_id,
        ),
        verdict(
            ChainId::PsiDimPlusGamma,
            psi <= dim + gamma,
            &pick(&["psi", "dim", "gamma"]),
            graph_id,
        ),
    ];
    let not_p2 = g.n() > 2;
    if report.is_tree {
        let leaves = g.degree_one_vertices().len();
        let mut values = pick(&["dim", "gamma", "gammaM"]);
        values.push(("leaves", leaves));
        if not_p2 {
            out.push(verdict(
                ChainId::TreeLeafSandwich,
                leaves.max(gamma) <= gamma_m && gamma_m <= dim + gamma,
                &values,
                graph_id,
            ));
        }
        out.push(verdict(
            ChainId::TreeLdBelowTwiceMld,
            gamma_l < 2 * gamma_m,
            &pick(&["gammaL", "gammaM"]),
            graph_id,
        ));
    }
    if report.girth.at_least(5) && not_p2 {
        out.push(verdict(
            ChainId::Girth5Chain,
            dim <= psi && psi <= gamma_m && gamma_m <= gamma_l,
            &pick(&["dim", "psi", "gammaM", "gammaL"]),
            graph_id,
        ));
    }
    out
}

/// `γ_L >= 2^(γ_M - 2) - 1`, the gap realized by the `G_s` family. Not a
/// general bound, so it is only evaluated for members of that family.
pub fn ld_gap_verdict(gamma_m: usize, gamma_l: usize, graph_id: &str) -> ChainVerdict {
    let bound = (1i64 << gamma_m.saturating_sub(2).min(62)) - 1;
    let holds = gamma_m < 2 || gamma_l as i64 >= bound;
    verdict(
        ChainId::LdExponentialGap,
        holds,
        &[("gammaM", gamma_m), ("gammaL", gamma_l)],
        graph_id,
    )
}

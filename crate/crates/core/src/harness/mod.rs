//! Inequality chains, property suites, witness search and corpus reports.
//!
//! Every chain except [`ChainId::PsiDimPlusGamma`] is a proven bound, so a
//! failing verdict means a bug in this crate. `PsiDimPlusGamma` is an open
//! conjecture: its failures are collected and reported, never treated as
//! fatal.

mod chains;
mod corpus;
mod search;
mod suites;

pub use chains::{chains_from_report, ld_gap_verdict, run_chains, ChainId, ChainVerdict};
pub use corpus::{
    analyze_entry, corpus_report, expand_corpus, CorpusEntry, CorpusMember, CorpusSpec,
    CorpusSummary, GraphRecord, Violation,
};
pub use search::{witness_search, FoundWitness, SearchConfig, SearchGoal, SearchResult};
pub use suites::{
    lemma_suite, lemma_suite_for, transform_suite, transform_suite_with, tree_suite, union_suite,
    SuiteOutcome,
};

use thiserror::Error;

use crate::families::FamilyError;
use crate::io::ParseError;
use crate::solver::SolveError;
use crate::transforms::TransformError;
use crate::tree::TreeError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("NoApplicableTransform: graph has a 4- or 6-cycle and girth below 5")]
    NoApplicableTransform,
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("invalid corpus spec: {0}")]
    Spec(#[from] serde_json::Error),
}

//! Exact computation of metric-location-domination and related invariants
//! on small connected graphs.
//!
//! The five invariants are the domination number `γ`, the metric dimension
//! `dim`, the metric-location-domination number `γ_M`, the
//! location-domination number `γ_L` and the doubly resolving number `ψ`.
//!
//! ```
//! use mldom_core::{families, solver::{self, Invariant}};
//!
//! let comb = families::gen_comb(3).unwrap();
//! let r = solver::solve(&comb.graph, Invariant::GammaM).unwrap();
//! assert_eq!(r.value, 3);
//! ```

pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod predicates;
pub mod solver;
pub mod transforms;
pub mod tree;
pub mod vertex_set;

pub use graph::{DistanceMatrix, Girth, Graph, GraphError};
pub use predicates::{FailureKind, PredicateError, ResolutionFailure, Verdict, Witness};
pub use solver::{
    Invariant, InvariantReport, InvariantResult, InvariantValues, SolveError, SolveOptions,
};
pub use vertex_set::VertexSet;

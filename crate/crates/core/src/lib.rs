//! Analytics for theorem-dependency networks.
//!
//! A [`DependencyCorpus`] records which earlier results each proof cites.
//! On top of it this crate computes cones, transitive reductions and
//! closures, longest chains, popularity and axiom-dependence statistics,
//! causal-graph foliations with branchial graphs, ball growth, unfolded
//! proof sizes, and superaxiom scans.
//!
//! Numeric results are generic: floating-point estimates over [`Real`],
//! unfolded proof counts over [`Count`]. The aliases below fix the usual
//! choices.

pub mod bits;
pub mod compile;
pub mod corpus;
pub mod dataset;
pub mod error;
pub mod foliation;
pub mod graphops;
pub mod scalar;
pub mod superaxiom;

pub use corpus::{CorpusBuilder, Dep, DepEdge, DependencyCorpus, Diagnostic, Node, NodeId, NodeKind};
pub use error::{Error, Result};
pub use scalar::{Count, Real};

/// Exact unfolded-proof tally.
pub type ExactTally = compile::ExpansionTally<num_bigint::BigUint>;
/// Growth curve in double precision.
pub type GrowthCurveF64 = graphops::GrowthCurve<f64>;
/// Degree statistics in double precision.
pub type DegreeStatsF64 = graphops::DegreeStats<f64>;

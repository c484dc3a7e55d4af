//! Closed-set systems, stratifications, transfer maps, and gluing.
//!
//! A [`Space`] is either an explicit finite topological space (points plus
//! the lattice of closed subsets) or the rational-point model of an affine
//! or torus variety, whose closed sets are ideals of a
//! [`PolyRing`](crate::commalg::PolyRing). The stratification machinery in
//! [`strat`] is agnostic to which kind each stratum is.

mod sample;
mod set;
mod strat;

pub use sample::{candidate_grid, sample_closed_sets, VarietySampler};
pub use set::{ClosedSet, Space};
pub use strat::{
    check_transfer_axioms, extract_stratification, glue_topology, induced_order,
    preimage_closure, stratum_transfer, verify_stratification, AxiomReport, ComorphismPair,
    ContinuousMap, Glued, LazyGlued, StratReport, StratificationData, TransferMap, TransferRule,
};

use thiserror::Error;

use crate::commalg::CommAlgError;
use crate::poset::PosetError;

#[derive(Debug, Clone, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Algebra(#[from] CommAlgError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("closed-set kind does not fit the space `{space}`: {detail}")]
    KindMismatch { space: String, detail: String },
    #[error("`{0}` is not a point of the space")]
    UnknownPoint(String),
    #[error("no stratum named `{0}`")]
    UnknownStratum(String),
    #[error("strata `{0}` and `{1}` are not strictly comparable")]
    NotComparable(String, String),
    #[error("partition is not a partition of the space: {0}")]
    NotAPartition(String),
    #[error("closure of part `{0}` is not a union of parts")]
    ClosureNotUnionOfParts(String),
    #[error("part `{0}` is {1}")]
    BadPart(String, String),
    #[error("set is not closed in stratum `{0}`")]
    NotClosedInStratum(String),
    #[error("transfer table does not determine the image of {0}")]
    NotInTable(String),
    #[error("transfer map {0}→{1} violates axiom: {2}")]
    TransferAxiom(String, String, String),
    #[error("maps have mismatched codomains: {0}")]
    MismatchedCodomains(String),
    #[error("strata point sets are not pairwise disjoint: `{0}` appears twice")]
    OverlappingStrata(String),
    #[error("stratification data is malformed: {0}")]
    BadData(String),
    #[error("glued family failed verification: {0}")]
    GlueVerification(String),
}

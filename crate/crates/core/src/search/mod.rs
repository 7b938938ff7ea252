//! Exhaustive enumeration of graph families, extremal search and the
//! structural audit.

mod argmax;
mod audit;
pub mod canon;
mod enumerate;
mod family;
mod verify;

pub use argmax::{all_graph_members, argmax_rho, VerificationReport, NEAR_TIE};
pub use audit::{audit, ExtremalAudit};
pub use canon::SmallGraph;
pub use enumerate::{enumerate_threshold, ThresholdEnumerator};
pub use family::{FamilySpec, Universe, ALL_GRAPHS_LIMIT, THRESHOLD_LIMIT};
pub use verify::{
    dense_block_hypothesis, graph_from_edge_string, tie_size, verify_signless_size_2n_minus_2,
    verify_size_block, verify_sparse_quasi_star, verify_threshold_suffices,
};

use crate::error::Result;

/// One representative per isomorphism class in an all-graphs family.
pub fn enumerate_all(f: &FamilySpec) -> Result<Vec<crate::graphs::LabeledGraph>> {
    Ok(all_graph_members(f)?
        .iter()
        .map(SmallGraph::to_labeled)
        .collect())
}

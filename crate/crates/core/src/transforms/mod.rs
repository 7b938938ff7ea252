//! Edge-rewiring transformations on stepwise adjacency matrices and
//! certificates for their effect on the spectral radius.

mod certify;
mod spec;
mod validate;

pub use certify::{
    added_side_residual, certify, coverage, identity_residuals, removed_side_residual, Coverage,
    MonotonicityCertificate, MONOTONE_SLACK,
};
pub use spec::{EdgeList, EffectiveIndices, TransformKind, TransformSpec};
pub use validate::{apply, apply_labeled, valid_specs, validate, Validation};

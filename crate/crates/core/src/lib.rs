//! Threshold graphs and the largest eigenvalue of
//! `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)`.
//!
//! [`graphs`] builds and recognizes threshold graphs, [`spectra`] computes
//! spectral radii and Perron vectors, [`transforms`] rewires edges on
//! stepwise matrices, and [`search`] runs exhaustive extremal searches.

pub mod error;
pub mod graphs;
pub mod report;
pub mod search;
pub mod spectra;
pub mod transforms;

pub use error::{Error, Result};
pub use graphs::{LabeledGraph, Step, ThresholdGraph};
pub use search::{FamilySpec, Universe, VerificationReport};
pub use spectra::{Alpha, Spectrum};
pub use transforms::{MonotonicityCertificate, TransformSpec};

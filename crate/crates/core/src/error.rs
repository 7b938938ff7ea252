use thiserror::Error;

/// Errors produced by graph construction, spectral computation and search.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("creation sequence is empty")]
    EmptySequence,

    #[error("creation sequence must start with an isolated vertex")]
    LeadingDominating,

    #[error("invalid creation symbol {0:?} (expected 'I' or 'D')")]
    InvalidSymbol(char),

    #[error("edge count m={m} out of range for n={n} (need {min} <= m <= {max})")]
    EdgeCountOutOfRange {
        n: usize,
        m: usize,
        min: usize,
        max: usize,
    },

    #[error("K_k v (K_3 u (n-k-3)K_1) is undefined for n={n}, m={m}: m is not kn - k(k+1)/2 + 3")]
    TildeUndefined { n: usize, m: usize },

    #[error("not a threshold graph: reduction stuck after {peeled} vertices ({remaining} left, none isolated or dominating)")]
    NotThreshold { peeled: usize, remaining: usize },

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid alpha: {0}")]
    InvalidAlpha(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix of size {size} exceeds the exact expansion limit of {limit}")]
    MatrixTooLarge { size: usize, limit: usize },

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid transformation: {0}")]
    InvalidTransform(String),

    #[error("infeasible family: {0}")]
    InfeasibleFamily(String),

    #[error("n={n} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

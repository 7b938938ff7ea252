//! `A_alpha` matrices, spectral radii, Perron vectors and quotient matrices.

mod alpha;
mod eigen;
mod matrix;
mod perron;
mod poly;
mod quotient;

pub use alpha::{Alpha, Rational};
pub use eigen::{
    dominant_eigenpair, q_upper_bound, residual_inf, signless_laplacian_radius, spectral_radius,
    spectral_radius_with, SolverConfig, Spectrum,
};
pub use matrix::SquareMatrix;
pub use perron::{perron_order_check, perron_order_violations, PerronViolation, PERRON_TOLERANCE};
pub use poly::{char_poly, eval as eval_poly, largest_real_root, CHAR_POLY_LIMIT};
pub use quotient::{partition_from_ranges, quotient_matrix, QuotientMatrix, Scalar};

use crate::graphs::LabeledGraph;

/// Absolute tolerance when comparing spectral radii of different graphs.
pub const RHO_TOLERANCE: f64 = 1e-9;

/// `A_alpha(G)` with exact rational entries.
pub fn alpha_matrix_exact(g: &LabeledGraph, alpha: Alpha) -> SquareMatrix<Rational> {
    let a = alpha.value();
    let off = Rational::from_integer(1) - a;
    let n = g.n();
    let mut m = SquareMatrix::zeros(n);
    for u in 0..n {
        m[(u, u)] = a * Rational::from_integer(g.degree(u) as i64);
        for v in g.neighbors(u) {
            m[(u, v)] = off;
        }
    }
    m
}

/// `A_alpha(G) = alpha D + (1 - alpha) A` in floating point.
pub fn alpha_matrix(g: &LabeledGraph, alpha: Alpha) -> SquareMatrix<f64> {
    alpha_matrix_exact(g, alpha).map(Scalar::to_f64)
}

/// `Q(G) = D + A` with exact entries.
pub fn signless_laplacian(g: &LabeledGraph) -> SquareMatrix<Rational> {
    alpha_matrix_exact(g, Alpha::HALF).map(|x| x * Rational::from_integer(2))
}

/// Largest eigenvalue of a quotient matrix, by the shifted power iteration.
pub fn quotient_radius<T: Scalar>(q: &QuotientMatrix<T>) -> crate::Result<f64> {
    Ok(dominant_eigenpair(&q.to_f64(), &SolverConfig::default())?.rho)
}

use super::matrix::SquareMatrix;
use super::{alpha_matrix, Alpha};
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;

/// Stopping rules for the power iteration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    /// Target for `max_i |(M x - rho x)_i|`.
    pub residual_tolerance: f64,
    /// Maximum change of the Rayleigh quotient between consecutive steps.
    pub rayleigh_tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            residual_tolerance: 1e-11,
            rayleigh_tolerance: 1e-13,
            max_iterations: 1_000_000,
        }
    }
}

/// Largest eigenvalue of a nonnegative matrix with its eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub rho: f64,
    /// Unit Euclidean norm, entrywise nonnegative.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// `max_i |(M x - rho x)_i|` for the returned pair.
    pub residual: f64,
}

/// Residual `max_i |(M x - lambda x)_i|`.
pub fn residual_inf(matrix: &SquareMatrix<f64>, x: &[f64], lambda: f64) -> f64 {
    let mut mx = vec![0.0; x.len()];
    matrix.mul_vec(x, &mut mx);
    mx.iter()
        .zip(x)
        .map(|(a, b)| (a - lambda * b).abs())
        .fold(0.0, f64::max)
}

/// Dominant eigenpair of a nonnegative irreducible matrix by power iteration
/// on `M + sigma I`.
///
/// `sigma` is the largest diagonal entry, or 1 when the diagonal vanishes, so
/// that the shifted spectrum has a unique eigenvalue of largest modulus even
/// for bipartite adjacency matrices. The start vector is the normalized
/// all-ones vector.
pub fn dominant_eigenpair(matrix: &SquareMatrix<f64>, config: &SolverConfig) -> Result<Spectrum> {
    let n = matrix.n();
    assert!(n > 0, "empty matrix has no eigenpair");
    if n == 1 {
        return Ok(Spectrum {
            rho: matrix[(0, 0)],
            perron: vec![1.0],
            iterations: 0,
            residual: 0.0,
        });
    }
    let max_diag = (0..n).map(|i| matrix[(i, i)]).fold(0.0, f64::max);
    let shift = if max_diag > 0.0 { max_diag } else { 1.0 };

    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut mx = vec![0.0; n];
    let mut prev_lambda = f64::NAN;
    let mut residual = f64::INFINITY;
    for it in 1..=config.max_iterations {
        matrix.mul_vec(&x, &mut mx);
        let lambda: f64 = x.iter().zip(&mx).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&mx)
            .map(|(xi, mi)| (mi - lambda * xi).abs())
            .fold(0.0, f64::max);
        if residual <= config.residual_tolerance
            && (lambda - prev_lambda).abs() <= config.rayleigh_tolerance
        {
            return Ok(Spectrum {
                rho: lambda,
                perron: x,
                iterations: it,
                residual,
            });
        }
        prev_lambda = lambda;
        // x <- (M + shift I) x / ||.||
        for (m, xi) in mx.iter_mut().zip(&x) {
            *m += shift * xi;
        }
        let norm = mx.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, m) in x.iter_mut().zip(&mx) {
            *xi = m / norm;
        }
    }
    Err(Error::NoConvergence {
        iterations: config.max_iterations,
        residual,
    })
}

/// `rho_alpha(G)` with a nonnegative unit eigenvector, computed per
/// connected component. For a disconnected graph the vector is supported on
/// the first component attaining the maximum.
pub fn spectral_radius(g: &LabeledGraph, alpha: Alpha) -> Result<Spectrum> {
    spectral_radius_with(g, alpha, &SolverConfig::default())
}

pub fn spectral_radius_with(
    g: &LabeledGraph,
    alpha: Alpha,
    config: &SolverConfig,
) -> Result<Spectrum> {
    let n = g.n();
    assert!(n > 0, "graph must have at least one vertex");
    if g.is_connected() {
        return dominant_eigenpair(&alpha_matrix(g, alpha), config);
    }
    let mut best: Option<(Vec<usize>, Spectrum)> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let spec = dominant_eigenpair(&alpha_matrix(&sub, alpha), config)?;
        iterations += spec.iterations;
        if best.as_ref().map_or(true, |(_, b)| spec.rho > b.rho) {
            best = Some((comp, spec));
        }
    }
    let (comp, spec) = best.expect("a graph with vertices has a component");
    let mut perron = vec![0.0; n];
    for (&v, &xv) in comp.iter().zip(&spec.perron) {
        perron[v] = xv;
    }
    let residual = residual_inf(&alpha_matrix(g, alpha), &perron, spec.rho);
    Ok(Spectrum {
        rho: spec.rho,
        perron,
        iterations,
        residual,
    })
}

/// Signless Laplacian spectral radius `q(G) = 2 rho_{1/2}(G)`.
pub fn signless_laplacian_radius(g: &LabeledGraph) -> Result<f64> {
    Ok(2.0 * spectral_radius(g, Alpha::HALF)?.rho)
}

/// `2m/(n-1) + n - 2`, an upper bound on `q(G)` for connected `G`.
pub fn q_upper_bound(n: usize, m: usize) -> f64 {
    assert!(n >= 2, "bound needs n >= 2");
    2.0 * m as f64 / (n - 1) as f64 + n as f64 - 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_radius() {
        for n in 2..9 {
            for alpha in [Alpha::ZERO, Alpha::HALF, Alpha::new(9, 10).unwrap()] {
                let s = spectral_radius(&LabeledGraph::complete(n), alpha).unwrap();
                assert!((s.rho - (n - 1) as f64).abs() < 1e-12);
                assert!(s.residual <= 1e-10);
                let e = 1.0 / (n as f64).sqrt();
                assert!(s.perron.iter().all(|x| (x - e).abs() < 1e-12));
            }
        }
    }

    #[test]
    fn star_adjacency_radius_needs_shift() {
        // Bipartite: eigenvalues +-2 at alpha = 0.
        let s = spectral_radius(&LabeledGraph::star(5), Alpha::ZERO).unwrap();
        assert!((s.rho - 2.0).abs() < 1e-12, "{}", s.rho);
        assert!(s.residual <= 1e-10);
    }

    #[test]
    fn star_signless_laplacian() {
        for n in 2..12 {
            let q = signless_laplacian_radius(&LabeledGraph::star(n)).unwrap();
            assert!((q - n as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn disconnected_takes_best_component() {
        let g = LabeledGraph::complete(5).union(&LabeledGraph::empty(1));
        let s = spectral_radius(&g, Alpha::HALF).unwrap();
        assert!((s.rho - 4.0).abs() < 1e-12);
        assert_eq!(s.perron[5], 0.0);
        assert!(s.residual <= 1e-10);

        let iso = spectral_radius(&LabeledGraph::empty(3), Alpha::HALF).unwrap();
        assert_eq!(iso.rho, 0.0);
        assert_eq!(iso.perron, vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn iteration_cap_reports_residual() {
        let cfg = SolverConfig {
            max_iterations: 2,
            ..SolverConfig::default()
        };
        let err = spectral_radius_with(&LabeledGraph::path(7), Alpha::ZERO, &cfg).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { iterations: 2, residual } if residual > 0.0));
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(q_upper_bound(7, 6), 7.0);
        assert_eq!(q_upper_bound(6, 10), 8.0);
        assert_eq!(q_upper_bound(6, 15), 10.0);
    }
}

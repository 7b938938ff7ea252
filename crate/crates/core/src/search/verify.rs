//! Exhaustive checks of the extremal characterizations.

use std::ops::RangeInclusive;

use super::argmax::{argmax_rho, VerificationReport};
use super::family::{FamilySpec, Universe};
use crate::error::Result;
use crate::graphs::{is_threshold, quasi_star, tilde_s, LabeledGraph};
use crate::spectra::{Alpha, RHO_TOLERANCE};

/// Size at which the quasi-star ties with the triangle variant at
/// `alpha = 1/2`, for the block `(r-1)n - r(r-1)/2 < m <= rn - r(r+1)/2`.
pub fn tie_size(n: usize, r: usize) -> usize {
    (r - 1) * n - r * (r - 1) / 2 + 3
}

/// Expected maximizers among connected threshold graphs of order `n` and
/// size `m` in the sparse regime: the quasi-star alone, joined by the
/// triangle variant at `alpha = 1/2` when `m` is the tie size.
fn quasi_star_expectation(n: usize, m: usize, alpha: Alpha, tie_at: usize) -> Result<Vec<String>> {
    let mut expected = vec![quasi_star(n, m)?.to_string()];
    if alpha.is_half() && m == tie_at {
        expected.push(tilde_s(n, m)?.to_string());
    }
    Ok(expected)
}

/// Connected threshold graphs with `n-1 <= m <= 2n-2`: the quasi-star is the
/// unique maximizer for `alpha` in `[1/2, 1)`, except for the two-way tie at
/// `alpha = 1/2, m = n+2`. Requires `n >= 4`.
pub fn verify_sparse_quasi_star(
    ns: RangeInclusive<usize>,
    alphas: &[Alpha],
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in ns {
        for m in n - 1..=2 * n - 2 {
            for &alpha in alphas {
                let f = FamilySpec::connected_threshold(n, m)?;
                let expected = quasi_star_expectation(n, m, alpha, n + 2)?;
                let mut r = argmax_rho(&f, alpha)?.with_expected(expected);
                r.outside_hypothesis = n < 4 || !alpha.at_least_half();
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Threshold graphs of order `n` and size `2n-2`, connected or not, at
/// `alpha = 1/2`: `K_5 u K_1` wins for `n = 6`, the quasi-star otherwise.
pub fn verify_signless_size_2n_minus_2(
    ns: RangeInclusive<usize>,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for n in ns {
        let m = 2 * n - 2;
        let f = FamilySpec::new(n, m, false, Universe::Threshold)?;
        let expected = if n == 6 {
            "IDDDDI".to_string()
        } else {
            quasi_star(n, m)?.to_string()
        };
        let mut r = argmax_rho(&f, Alpha::HALF)?.with_expected(vec![expected]);
        r.outside_hypothesis = n < 4;
        out.push(r);
    }
    Ok(out)
}

/// `n > (30r - 63 + 5 sqrt(32r^2 - 136r + 137)) / 2`, decided exactly.
pub fn dense_block_hypothesis(r: usize, n: usize) -> bool {
    let r = r as i128;
    let a = 30 * r - 63;
    let b = 32 * r * r - 136 * r + 137;
    let lhs = 2 * n as i128 - a;
    lhs > 0 && lhs * lhs > 25 * b
}

/// Connected threshold graphs of order `n` with
/// `(r-1)n - r(r-1)/2 < m <= rn - r(r+1)/2`: the quasi-star is the unique
/// maximizer except for the tie with the triangle variant at `alpha = 1/2`
/// and `m = (r-1)n - r(r-1)/2 + 3`. Instances below the proven bound on `n`
/// are run and flagged.
pub fn verify_size_block(r: usize, n: usize, alphas: &[Alpha]) -> Result<Vec<VerificationReport>> {
    assert!(r >= 1 && n > r, "need n > r >= 1");
    let lo = (r - 1) * n - r * (r - 1) / 2 + 1;
    let hi = r * n - r * (r + 1) / 2;
    let outside = r < 3 || !dense_block_hypothesis(r, n);
    let mut out = Vec::new();
    for m in lo..=hi {
        for &alpha in alphas {
            let f = FamilySpec::connected_threshold(n, m)?;
            let expected = quasi_star_expectation(n, m, alpha, tie_size(n, r))?;
            let mut rep = argmax_rho(&f, alpha)?.with_expected(expected);
            rep.outside_hypothesis = outside || !alpha.at_least_half();
            out.push(rep);
        }
    }
    Ok(out)
}

/// Connected graphs of order `n <= 7` and size `m`: the best threshold
/// graph is as good as the best graph overall, and every overall maximizer
/// is a threshold graph. The report's expected set is the threshold
/// subset of the maximizers.
pub fn verify_threshold_suffices(n: usize, m: usize, alpha: Alpha) -> Result<VerificationReport> {
    let all = argmax_rho(&FamilySpec::new(n, m, true, Universe::All)?, alpha)?;
    let thr = argmax_rho(&FamilySpec::connected_threshold(n, m)?, alpha)?;
    let threshold_maximizers: Vec<String> = all
        .maximizers
        .iter()
        .filter(|key| is_threshold(&graph_from_edge_string(n, key)))
        .cloned()
        .collect();
    let same_max = (all.rho_max - thr.rho_max).abs() <= RHO_TOLERANCE;
    let mut r = all.with_expected(threshold_maximizers);
    r.matches_theorem &= same_max;
    Ok(r)
}

/// Inverse of the `1-2+1-3` key format.
pub fn graph_from_edge_string(n: usize, key: &str) -> LabeledGraph {
    let edges = key.split('+').filter(|e| *e != "empty").map(|e| {
        let (u, v) = e.split_once('-').expect("edge key has the form u-v");
        let u: usize = u.parse().expect("vertex index");
        let v: usize = v.parse().expect("vertex index");
        (u - 1, v - 1)
    });
    LabeledGraph::from_edges(n, edges).expect("edge key describes a simple graph")
}

use super::spec::{TransformKind, TransformSpec};
use super::validate::apply_labeled;
use crate::error::{Error, Result};
use crate::graphs::ThresholdGraph;
use crate::spectra::{spectral_radius, Alpha, RHO_TOLERANCE};

/// Slack allowed when asserting that the radius did not decrease.
pub const MONOTONE_SLACK: f64 = 1e-10;

/// Which proven statement, if any, predicts the effect of a transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    /// `k = q+1`, `alpha >= 1/2`: non-decreasing, equality iff
    /// `alpha = 1/2`, `l = 0` and `p = h+1 = q+3`.
    AdjacentColumns,
    /// `BASIC` with `k = q+2`, `p > h+1`, `alpha >= 1/2`: strictly increasing.
    SkipColumn,
    NotCovered,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityCertificate {
    pub spec: TransformSpec,
    pub alpha: Alpha,
    pub coverage: Coverage,
    pub rho_before: f64,
    pub rho_after: f64,
    /// `None` when not covered.
    pub predicted_equality: Option<bool>,
    /// `|rho_after - rho_before| <= RHO_TOLERANCE`.
    pub observed_equality: bool,
    /// Removed-edge side identity, evaluated at the host's eigenpair.
    pub residual_eq1: f64,
    /// Added-edge side identity, evaluated at the result's eigenpair.
    pub residual_eq2: f64,
}

impl MonotonicityCertificate {
    pub fn delta(&self) -> f64 {
        self.rho_after - self.rho_before
    }

    /// Residual limit `1e-8 max(1, rho)` for each identity.
    pub fn residual_limit(&self) -> (f64, f64) {
        (
            1e-8 * self.rho_before.max(1.0),
            1e-8 * self.rho_after.max(1.0),
        )
    }

    pub fn residuals_ok(&self) -> bool {
        let (l1, l2) = self.residual_limit();
        self.residual_eq1 <= l1 && self.residual_eq2 <= l2
    }

    /// Observation agrees with the covered prediction. Always true when not
    /// covered.
    pub fn holds(&self) -> bool {
        let Some(predicted) = self.predicted_equality else {
            return true;
        };
        let monotone = self.delta() >= -MONOTONE_SLACK;
        match self.coverage {
            Coverage::SkipColumn => self.delta() > RHO_TOLERANCE,
            _ => monotone && predicted == self.observed_equality,
        }
    }
}

/// Exact prediction for `spec` at `alpha`.
pub fn coverage(spec: &TransformSpec, alpha: Alpha) -> (Coverage, Option<bool>) {
    if !alpha.at_least_half() {
        return (Coverage::NotCovered, None);
    }
    if spec.k == spec.q + 1 {
        let equality =
            alpha.is_half() && spec.l == 0 && spec.p == spec.h + 1 && spec.h + 1 == spec.q + 3;
        return (Coverage::AdjacentColumns, Some(equality));
    }
    if spec.kind == TransformKind::Basic && spec.k == spec.q + 2 && spec.p > spec.h + 1 {
        return (Coverage::SkipColumn, Some(false));
    }
    (Coverage::NotCovered, None)
}

/// `|(rho - K alpha)(x_h - x_p) - ((K-Q+1) alpha x_p + (1-alpha)(x_Q + ... + x_K))|`
/// for the host's eigenpair `(rho, x)` in stepwise labeling.
pub fn removed_side_residual(spec: &TransformSpec, alpha: Alpha, rho: f64, x: &[f64]) -> f64 {
    let e = spec.effective_indices();
    let a = alpha.to_f64();
    let xi = |i: usize| x[i - 1];
    let lhs = (rho - e.big_k as f64 * a) * (xi(spec.h) - xi(spec.p));
    let tail: f64 = (e.big_q..=e.big_k).map(xi).sum();
    let rhs = (e.big_k + 1 - e.big_q) as f64 * a * xi(spec.p) + (1.0 - a) * tail;
    (lhs - rhs).abs()
}

/// `|(rho - P alpha + 1)(y_q - y_k) - ((P-H+1) alpha y_k + (1-alpha)(y_H + ... + y_P))|`
/// for the result's eigenpair `(rho, y)` in the host's stepwise labeling.
pub fn added_side_residual(spec: &TransformSpec, alpha: Alpha, rho: f64, y: &[f64]) -> f64 {
    let e = spec.effective_indices();
    let a = alpha.to_f64();
    let yi = |i: usize| y[i - 1];
    let lhs = (rho - e.big_p as f64 * a + 1.0) * (yi(spec.q) - yi(spec.k));
    let tail: f64 = (e.big_h..=e.big_p).map(yi).sum();
    let rhs = (e.big_p + 1 - e.big_h) as f64 * a * yi(spec.k) + (1.0 - a) * tail;
    (lhs - rhs).abs()
}

/// Both identity residuals for a valid spec.
pub fn identity_residuals(
    g: &ThresholdGraph,
    spec: &TransformSpec,
    alpha: Alpha,
) -> Result<(f64, f64)> {
    let c = certify(g, spec, alpha)?;
    Ok((c.residual_eq1, c.residual_eq2))
}

/// Applies `spec`, measures both radii and compares with the prediction.
pub fn certify(
    g: &ThresholdGraph,
    spec: &TransformSpec,
    alpha: Alpha,
) -> Result<MonotonicityCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let after = apply_labeled(g, spec)?;
    let before = spectral_radius(&g.to_labeled(), alpha)?;
    let after = spectral_radius(&after, alpha)?;
    let (coverage, predicted_equality) = coverage(spec, alpha);
    Ok(MonotonicityCertificate {
        spec: *spec,
        alpha,
        coverage,
        rho_before: before.rho,
        rho_after: after.rho,
        predicted_equality,
        observed_equality: (after.rho - before.rho).abs() <= RHO_TOLERANCE,
        residual_eq1: removed_side_residual(spec, alpha, before.rho, &before.perron),
        residual_eq2: added_side_residual(spec, alpha, after.rho, &after.perron),
    })
}

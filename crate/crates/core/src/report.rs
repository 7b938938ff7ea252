//! Line-oriented text records for reports, spectra, certificates and audits.
//! Floats use 17 significant digits so records reproduce bit-for-bit.

use crate::search::{ExtremalAudit, VerificationReport};
use crate::spectra::Spectrum;
use crate::transforms::{Coverage, MonotonicityCertificate};

pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

fn flag(b: bool) -> u8 {
    b as u8
}

/// `family=<H|G>,n=<n>,m=<m>,alpha=<p/q> rho=<f> maximizers=<a;b> tie_gap=<f> ok=<0|1>`;
/// `tie_gap=inf` when every member is a maximizer.
pub fn report_record(r: &VerificationReport) -> String {
    format!(
        "{},alpha={} rho={} maximizers={} tie_gap={} ok={}",
        r.family,
        r.alpha,
        float17(r.rho_max),
        r.maximizers.join(";"),
        r.tie_gap.map_or_else(|| "inf".to_string(), float17),
        flag(r.matches_theorem)
    )
}

pub fn spectrum_record(s: &Spectrum) -> String {
    let perron: Vec<String> = s.perron.iter().map(|&x| float17(x)).collect();
    format!(
        "rho={} iterations={} residual={} perron={}",
        float17(s.rho),
        s.iterations,
        float17(s.residual),
        perron.join(";")
    )
}

pub fn certificate_record(c: &MonotonicityCertificate) -> String {
    let coverage = match c.coverage {
        Coverage::AdjacentColumns => "k=q+1",
        Coverage::SkipColumn => "k=q+2",
        Coverage::NotCovered => "none",
    };
    format!(
        "transform={} alpha={} rho_before={} rho_after={} coverage={} predicted_equality={} observed_equality={} residual_eq1={} residual_eq2={} ok={}",
        c.spec.to_string().replace(' ', ":"),
        c.alpha,
        float17(c.rho_before),
        float17(c.rho_after),
        coverage,
        c.predicted_equality.map_or("na".to_string(), |b| flag(b).to_string()),
        flag(c.observed_equality),
        float17(c.residual_eq1),
        float17(c.residual_eq2),
        flag(c.holds() && c.residuals_ok())
    )
}

pub fn audit_record(a: &ExtremalAudit) -> String {
    let delta: Vec<String> = a.delta.iter().map(|(j, c)| format!("{j}:{c}")).collect();
    let opt = |x: Option<usize>| x.map_or("na".to_string(), |v| v.to_string());
    format!(
        "n={} r={} kappa={} delta={} s={} theta={} identity={}",
        a.n,
        a.r,
        a.kappa,
        delta.join(";"),
        opt(a.s),
        opt(a.theta),
        a.identity_holds
            .map_or("na".to_string(), |b| flag(b).to_string())
    )
}

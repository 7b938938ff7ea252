use super::{spectral_radius, Alpha};
use crate::error::{Error, Result};
use crate::graphs::{is_threshold, LabeledGraph};

/// Entries closer than this count as equal.
pub const PERRON_TOLERANCE: f64 = 1e-9;

/// A broken ordering rule between two Perron vector entries (0-based vertices).
#[derive(Clone, Debug, PartialEq)]
pub enum PerronViolation {
    /// `N(u)-v` strictly contains `N(v)-u` but `x_u <= x_v`.
    NotStrictlyLarger {
        u: usize,
        v: usize,
        xu: f64,
        xv: f64,
    },
    /// `N(u)-v = N(v)-u` but `x_u != x_v`.
    NotEqual {
        u: usize,
        v: usize,
        xu: f64,
        xv: f64,
    },
    /// Threshold graph with `d_u > d_v` but `x_u < x_v`.
    DegreeOrder {
        u: usize,
        v: usize,
        xu: f64,
        xv: f64,
    },
}

enum Containment {
    Equal,
    Strict,
    None,
}

fn compare_neighborhoods(g: &LabeledGraph, u: usize, v: usize) -> Containment {
    let mut proper = false;
    for w in 0..g.n() {
        if w == u || w == v {
            continue;
        }
        match (g.has_edge(u, w), g.has_edge(v, w)) {
            (false, true) => return Containment::None,
            (true, false) => proper = true,
            _ => {}
        }
    }
    if proper {
        Containment::Strict
    } else {
        Containment::Equal
    }
}

/// Checks the ordering rules of the Perron vector of a connected graph:
/// neighborhood domination forces a strictly larger entry, twins get equal
/// entries, and in a threshold graph entries follow degrees.
pub fn perron_order_check(g: &LabeledGraph, alpha: Alpha) -> Result<Vec<PerronViolation>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let x = spectral_radius(g, alpha)?.perron;
    Ok(perron_order_violations(g, &x))
}

/// Same rules against a supplied vector.
pub fn perron_order_violations(g: &LabeledGraph, x: &[f64]) -> Vec<PerronViolation> {
    let n = g.n();
    let threshold = is_threshold(g);
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (xu, xv) = (x[u], x[v]);
            match compare_neighborhoods(g, u, v) {
                Containment::Strict if xu - xv <= PERRON_TOLERANCE => {
                    out.push(PerronViolation::NotStrictlyLarger { u, v, xu, xv });
                }
                Containment::Equal if u < v && (xu - xv).abs() > PERRON_TOLERANCE => {
                    out.push(PerronViolation::NotEqual { u, v, xu, xv });
                }
                _ => {}
            }
            if threshold && g.degree(u) > g.degree(v) && xu < xv - PERRON_TOLERANCE {
                out.push(PerronViolation::DegreeOrder { u, v, xu, xv });
            }
        }
    }
    out
}

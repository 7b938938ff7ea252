use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::canon::{classes_by_size, SmallGraph};
use super::enumerate::enumerate_threshold;
use super::family::{FamilySpec, Universe};
use crate::error::Result;
use crate::graphs::LabeledGraph;
use crate::spectra::{spectral_radius, Alpha, RHO_TOLERANCE};

/// Gaps below this (but above [`RHO_TOLERANCE`]) are reported as near ties.
pub const NEAR_TIE: f64 = 1e-6;

/// Result of an exhaustive search for the largest spectral radius in a
/// family, optionally compared with an expected maximizer set.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub family: FamilySpec,
    pub alpha: Alpha,
    /// Sorted keys (creation sequences, or edge strings for all graphs) of
    /// every member within [`RHO_TOLERANCE`] of `rho_max`.
    pub maximizers: Vec<String>,
    pub rho_max: f64,
    /// `rho_max` minus the best radius outside the maximizer set; `None`
    /// when every member is a maximizer.
    pub tie_gap: Option<f64>,
    /// Number of family members examined.
    pub members: usize,
    /// Sorted, deduplicated expected maximizer keys.
    pub expected: Option<Vec<String>>,
    pub matches_theorem: bool,
    /// The instance lies outside the range where the expectation is proven.
    pub outside_hypothesis: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn with_expected(mut self, expected: Vec<String>) -> Self {
        let mut expected = expected;
        expected.sort();
        expected.dedup();
        self.matches_theorem = expected == self.maximizers;
        self.expected = Some(expected);
        self
    }

    pub fn near_tie(&self) -> bool {
        self.tie_gap.is_some_and(|g| g < NEAR_TIE)
    }
}

/// Per-chunk partial result; merging is associative and yields the same
/// maximizer set as a single sequential pass.
#[derive(Clone, Debug)]
struct Partial {
    rho_max: f64,
    members: Vec<(String, f64)>,
    best_other: f64,
    count: usize,
}

impl Partial {
    fn empty() -> Self {
        Self {
            rho_max: f64::NEG_INFINITY,
            members: Vec::new(),
            best_other: f64::NEG_INFINITY,
            count: 0,
        }
    }

    fn push(&mut self, key: String, rho: f64) {
        self.count += 1;
        self.absorb(vec![(key, rho)], rho, f64::NEG_INFINITY);
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.count += other.count;
        self.absorb(other.members, other.rho_max, other.best_other);
        self
    }

    fn absorb(&mut self, members: Vec<(String, f64)>, rho_max: f64, best_other: f64) {
        self.rho_max = self.rho_max.max(rho_max);
        self.best_other = self.best_other.max(best_other);
        let cut = self.rho_max - RHO_TOLERANCE;
        let mut all = std::mem::take(&mut self.members);
        all.extend(members);
        for (key, rho) in all {
            if rho >= cut {
                self.members.push((key, rho));
            } else {
                self.best_other = self.best_other.max(rho);
            }
        }
    }
}

fn evaluate(graphs: impl Iterator<Item = (String, LabeledGraph)>, alpha: Alpha) -> Result<Partial> {
    let mut part = Partial::empty();
    for (key, g) in graphs {
        let rho = spectral_radius(&g, alpha)?.rho;
        part.push(key, rho);
    }
    Ok(part)
}

/// Every family member's key and graph, for universes small enough to list.
pub fn all_graph_members(f: &FamilySpec) -> Result<Vec<SmallGraph>> {
    f.check()?;
    Ok(classes_by_size(f.n)[f.m]
        .iter()
        .filter(|g| !f.connected_only || g.is_connected())
        .copied()
        .collect())
}

/// Exhaustive search for the largest `rho_alpha` in the family, run on the
/// current rayon pool. The result does not depend on the thread count.
pub fn argmax_rho(f: &FamilySpec, alpha: Alpha) -> Result<VerificationReport> {
    let start = Instant::now();
    let pieces = 4 * rayon::current_num_threads();
    let partials: Vec<Result<Partial>> = match f.universe {
        Universe::Threshold => enumerate_threshold(f)?
            .split(pieces)
            .into_par_iter()
            .map(|walk| evaluate(walk.map(|g| (g.to_string(), g.to_labeled())), alpha))
            .collect(),
        Universe::All => {
            let members = all_graph_members(f)?;
            let chunk = members.len().div_ceil(pieces).max(1);
            members
                .par_chunks(chunk)
                .map(|c| evaluate(c.iter().map(|g| (g.edge_string(), g.to_labeled())), alpha))
                .collect()
        }
    };
    let mut total = Partial::empty();
    for p in partials {
        total = total.merge(p?);
    }
    let mut maximizers: Vec<String> = total.members.into_iter().map(|(k, _)| k).collect();
    maximizers.sort();
    Ok(VerificationReport {
        family: *f,
        alpha,
        maximizers,
        rho_max: total.rho_max,
        tie_gap: (total.best_other > f64::NEG_INFINITY).then_some(total.rho_max - total.best_other),
        members: total.count,
        expected: None,
        matches_theorem: true,
        outside_hypothesis: false,
        elapsed: start.elapsed(),
    })
}

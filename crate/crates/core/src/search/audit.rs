use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graphs::ThresholdGraph;

/// Structural quantities of a connected threshold graph read off its
/// stepwise adjacency matrix `(a_ij)` and degrees `d_1 >= ... >= d_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalAudit {
    pub n: usize,
    pub r: usize,
    /// `max{j : a_{j+1,j} = 1}`, 0 for a single vertex.
    pub kappa: usize,
    /// `j -> #{i > j : d_i = j}` for `1 <= j <= kappa`, nonzero entries only.
    pub delta: BTreeMap<usize, usize>,
    /// Largest `s` with `d_{r+s} >= r+1`, if positive.
    pub s: Option<usize>,
    /// `d_{r+s} - r` when `s` exists.
    pub theta: Option<usize>,
    /// `n = sum_j delta_j + kappa`; `None` for a single vertex.
    pub identity_holds: Option<bool>,
}

impl ExtremalAudit {
    pub fn delta_sum(&self) -> usize {
        self.delta.values().sum()
    }
}

pub fn audit(g: &ThresholdGraph, r: usize) -> Result<ExtremalAudit> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let adj = g.to_labeled();
    // 1-based d_i in stepwise order.
    let d = |i: usize| adj.degree(i - 1);
    let kappa = (1..n)
        .filter(|&j| adj.has_edge(j, j - 1))
        .max()
        .unwrap_or(0);
    let mut delta = BTreeMap::new();
    for j in 1..=kappa {
        let count = (j + 1..=n).filter(|&i| d(i) == j).count();
        if count > 0 {
            delta.insert(j, count);
        }
    }
    let high = (1..=n).filter(|&i| d(i) > r).count();
    let s = (high > r).then(|| high - r);
    let theta = s.map(|s| d(r + s) - r);
    let mut out = ExtremalAudit {
        n,
        r,
        kappa,
        delta,
        s,
        theta,
        identity_holds: None,
    };
    if n > 1 {
        out.identity_holds = Some(out.delta_sum() + kappa == n);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{quasi_star, tilde_s};

    #[test]
    fn triangle_variant() {
        let a = audit(&tilde_s(24, 48).unwrap(), 3).unwrap();
        assert_eq!(a.kappa, 4);
        assert_eq!(a.delta, BTreeMap::from([(2, 19), (4, 1)]));
        assert_eq!(a.identity_holds, Some(true));
        // Degrees 23, 23, 4, 4, 4, 2, ...: d_i >= 4 for i <= 5.
        assert_eq!(a.s, Some(2));
        assert_eq!(a.theta, Some(1));
    }

    #[test]
    fn quasi_star_6_10() {
        // Degrees 5, 5, 3, 3, 2, 2 with a_43 = 1 and a_54 = 0.
        let a = audit(&quasi_star(6, 10).unwrap(), 2).unwrap();
        assert_eq!(a.kappa, 3);
        assert_eq!(a.delta, BTreeMap::from([(2, 2), (3, 1)]));
        assert_eq!(a.identity_holds, Some(true));
        assert_eq!(a.s, Some(2));
        assert_eq!(a.theta, Some(1));
    }

    #[test]
    fn complete_and_trivial() {
        for n in 2..9 {
            let kn: ThresholdGraph = std::iter::once('I')
                .chain(std::iter::repeat('D').take(n - 1))
                .collect::<String>()
                .parse()
                .unwrap();
            let a = audit(&kn, 1).unwrap();
            assert_eq!(a.kappa, n - 1);
            assert_eq!(a.delta, BTreeMap::from([(n - 1, 1)]));
            assert_eq!(a.identity_holds, Some(true));
        }
        let k1: ThresholdGraph = "I".parse().unwrap();
        assert_eq!(audit(&k1, 1).unwrap().identity_holds, None);
        assert_eq!(audit(&"IDI".parse().unwrap(), 1), Err(Error::Disconnected));
    }
}

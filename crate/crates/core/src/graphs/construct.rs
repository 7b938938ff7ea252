//! The named threshold-graph families: the quasi-star `S(n,m)`, the graph
//! `L(n,m)` and the triangle variant `Ŝ(n,m)`.

use super::{Step, ThresholdGraph};
use crate::error::{Error, Result};

/// Integer parameters attached to an order/size pair.
///
/// `k` is the largest integer (capped at `n-1`) with
/// `m >= (n-1) + (n-2) + ... + (n-k)`, and `a` the excess. `kbar` is the
/// largest integer with `m-n+1 >= 1 + 2 + ... + (kbar-1)`, and `abar` the
/// excess.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitParams {
    pub k: usize,
    pub a: usize,
    pub kbar: usize,
    pub abar: usize,
}

pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_connected_range(n: usize, m: usize) -> Result<()> {
    let min = n.saturating_sub(1);
    let max = max_edges(n);
    if n == 0 || m < min || m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, min, max });
    }
    Ok(())
}

/// `(n-1) + (n-2) + ... + (n-k)`.
fn top_rows(n: usize, k: usize) -> usize {
    k * n - k * (k + 1) / 2
}

pub fn split_params(n: usize, m: usize) -> Result<SplitParams> {
    check_connected_range(n, m)?;
    let mut k = 0;
    while k < n - 1 && top_rows(n, k + 1) <= m {
        k += 1;
    }
    let a = m - top_rows(n, k);
    let excess = m + 1 - n;
    let mut kbar = 1;
    while (kbar + 1) * kbar / 2 <= excess {
        kbar += 1;
    }
    let abar = excess - kbar * (kbar - 1) / 2;
    Ok(SplitParams { k, a, kbar, abar })
}

#[derive(Default)]
struct SequenceBuilder(Vec<Step>);

impl SequenceBuilder {
    fn isolated(mut self, count: usize) -> Self {
        self.0.extend(std::iter::repeat(Step::Isolated).take(count));
        self
    }

    fn dominating(mut self, count: usize) -> Self {
        self.0
            .extend(std::iter::repeat(Step::Dominating).take(count));
        self
    }

    /// `K_c`, built as one vertex followed by `c-1` dominating ones.
    fn clique(self, c: usize) -> Self {
        if c == 0 {
            self
        } else {
            self.isolated(1).dominating(c - 1)
        }
    }

    fn finish(self) -> ThresholdGraph {
        ThresholdGraph::normalized(self.0)
    }
}

/// `S(n,m) = K_k ∨ (K_{1,a} ∪ (n-a-k-1)K_1)`.
pub fn quasi_star(n: usize, m: usize) -> Result<ThresholdGraph> {
    let SplitParams { k, a, .. } = split_params(n, m)?;
    // a leaves, then the star center over them (K_{1,0} is a lone vertex),
    // then the remaining isolated vertices, then the dominating clique.
    let b = SequenceBuilder::default().isolated(a);
    let b = if a > 0 {
        b.dominating(1)
    } else {
        b.isolated(1)
    };
    let g = b.isolated(n - a - k - 1).dominating(k).finish();
    debug_assert_eq!(g.m(), m);
    Ok(g)
}

/// `L(n,m)`: `(K_kbar ∪ (n-kbar-1)K_1) ∨ K_1` when `abar = 0`, otherwise
/// `(K_abar ∨ (K_{kbar-abar} ∪ K_1) ∪ (n-kbar-2)K_1) ∨ K_1`.
pub fn l_graph(n: usize, m: usize) -> Result<ThresholdGraph> {
    let SplitParams { kbar, abar, .. } = split_params(n, m)?;
    if n < 2 {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            min: 1,
            max: 0,
        });
    }
    let g = if abar == 0 {
        SequenceBuilder::default()
            .clique(kbar)
            .isolated(n - kbar - 1)
            .dominating(1)
            .finish()
    } else {
        SequenceBuilder::default()
            .clique(kbar - abar)
            .isolated(1)
            .dominating(abar)
            .isolated(n - kbar - 2)
            .dominating(1)
            .finish()
    };
    debug_assert_eq!(g.m(), m);
    Ok(g)
}

/// `Ŝ(n,m) = K_k ∨ (K_3 ∪ (n-k-3)K_1)`, defined when
/// `m = kn - k(k+1)/2 + 3` for some `k` with `n-k-3 >= 0`.
pub fn tilde_s(n: usize, m: usize) -> Result<ThresholdGraph> {
    if n < 3 {
        return Err(Error::TildeUndefined { n, m });
    }
    let k = (0..=n - 3)
        .find(|&k| top_rows(n, k) + 3 == m)
        .ok_or(Error::TildeUndefined { n, m })?;
    let g = SequenceBuilder::default()
        .clique(3)
        .isolated(n - k - 3)
        .dominating(k)
        .finish();
    debug_assert_eq!(g.m(), m);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::LabeledGraph;

    fn edges_1based(g: &ThresholdGraph) -> Vec<(usize, usize)> {
        g.to_labeled()
            .edges()
            .into_iter()
            .map(|(u, v)| (u + 1, v + 1))
            .collect()
    }

    fn sorted(mut e: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        e.iter_mut().for_each(|p| *p = (p.0.min(p.1), p.0.max(p.1)));
        e.sort_unstable();
        e
    }

    #[test]
    fn split_params_examples() {
        assert_eq!(
            split_params(6, 10).unwrap(),
            SplitParams {
                k: 2,
                a: 1,
                kbar: 3,
                abar: 2
            }
        );
        for n in 2..12 {
            let p = split_params(n, n - 1).unwrap();
            assert_eq!((p.k, p.a, p.kbar, p.abar), (1, 0, 1, 0), "n={n}");
        }
        let p = split_params(6, 15).unwrap();
        assert_eq!((p.k, p.a), (5, 0));
        assert!(split_params(6, 4).is_err());
        assert!(split_params(6, 16).is_err());
    }

    #[test]
    fn split_params_reconstruct_m() {
        for n in 1..20 {
            for m in n - 1..=max_edges(n) {
                let p = split_params(n, m).unwrap();
                assert_eq!(top_rows(n, p.k) + p.a, m);
                assert!(p.k == n - 1 || p.a < n - p.k - 1, "n={n} m={m} {p:?}");
                assert_eq!(m + 1 - n, p.kbar * (p.kbar - 1) / 2 + p.abar);
                assert!(p.abar < p.kbar);
            }
        }
    }

    #[test]
    fn quasi_star_small_orders() {
        // S(6,10): edges 12,13,14,15,16,26,24,23,25,34.
        let s = quasi_star(6, 10).unwrap();
        assert_eq!(s.to_string(), "IDIIDD");
        assert_eq!(
            edges_1based(&s),
            sorted(vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 6),
                (2, 4),
                (2, 3),
                (2, 5),
                (3, 4)
            ])
        );
        // S(6,9): edges 12,13,14,15,16,26,24,23,25.
        assert_eq!(
            edges_1based(&quasi_star(6, 9).unwrap()),
            sorted(vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 6),
                (2, 4),
                (2, 3),
                (2, 5)
            ])
        );
    }

    #[test]
    fn quasi_star_extremes() {
        for n in 1..10 {
            assert_eq!(
                quasi_star(n, n - 1).unwrap().to_labeled(),
                if n == 1 {
                    LabeledGraph::empty(1)
                } else {
                    LabeledGraph::star(n)
                }
            );
            assert_eq!(
                quasi_star(n, max_edges(n)).unwrap().to_labeled(),
                LabeledGraph::complete(n)
            );
        }
    }

    #[test]
    fn quasi_star_degree_sequence() {
        for n in 2..14 {
            for m in n - 1..=max_edges(n) {
                let g = quasi_star(n, m).unwrap();
                let SplitParams { k, a, .. } = split_params(n, m).unwrap();
                let mut expected = vec![n - 1; k];
                expected.push(k + a);
                expected.extend(std::iter::repeat(k + 1).take(a));
                expected.extend(std::iter::repeat(k).take(n - a - k - 1));
                expected.sort_unstable_by(|x, y| y.cmp(x));
                assert_eq!(g.degree_sequence(), expected, "n={n} m={m}");
                assert!(g.is_connected());
                assert_eq!(g.m(), m);
            }
        }
    }

    #[test]
    fn l_graph_seven_twelve() {
        // L(6,10): edges 12,13,14,15,16,25,24,23,34,35.
        assert_eq!(
            edges_1based(&l_graph(6, 10).unwrap()),
            sorted(vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 5),
                (2, 4),
                (2, 3),
                (3, 4),
                (3, 5)
            ])
        );
    }

    #[test]
    fn l_graph_is_star_at_minimum() {
        for n in 2..12 {
            let l = l_graph(n, n - 1).unwrap();
            assert_eq!(l, quasi_star(n, n - 1).unwrap());
            assert_eq!(l.to_labeled(), LabeledGraph::star(n));
        }
    }

    #[test]
    fn l_graph_all_sizes() {
        for n in 2..14 {
            for m in n - 1..=max_edges(n) {
                let g = l_graph(n, m).unwrap();
                assert_eq!(g.m(), m);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn tilde_s_examples() {
        let g = tilde_s(6, 8).unwrap();
        assert_eq!(g.to_string(), "IDDIID");
        assert_eq!(g.degree_sequence(), vec![5, 3, 3, 3, 1, 1]);
        assert_eq!(tilde_s(7, 8), Err(Error::TildeUndefined { n: 7, m: 8 }));
        let big = tilde_s(24, 48).unwrap();
        let mut expected = vec![23, 23, 4, 4, 4];
        expected.extend(std::iter::repeat(2).take(19));
        assert_eq!(big.degree_sequence(), expected);
        assert_eq!(split_params(24, 48).unwrap().a, 3);
    }

    #[test]
    fn tilde_s_equals_l_graph_at_n_plus_2() {
        for n in 4..30 {
            assert_eq!(
                tilde_s(n, n + 2).unwrap(),
                l_graph(n, n + 2).unwrap(),
                "n={n}"
            );
        }
    }
}

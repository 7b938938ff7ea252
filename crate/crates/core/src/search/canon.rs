//! Isomorphism classes of small graphs (at most 7 vertices).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::family::ALL_GRAPHS_LIMIT;
use crate::graphs::LabeledGraph;

/// A graph on at most 7 vertices as a bit set over vertex pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    bits: u32,
}

/// Bit position of the pair `{u, v}`, `u < v`, in the column-major upper
/// triangle: (0,1), (0,2), (1,2), (0,3), ...
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= ALL_GRAPHS_LIMIT,
            "small graphs have at most 7 vertices"
        );
        Self {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn from_labeled(g: &LabeledGraph) -> Self {
        let mut s = Self::empty(g.n());
        for (u, v) in g.edges() {
            s.bits |= 1 << pair_index(u, v);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits >> pair_index(u.min(v), u.max(v)) & 1 == 1
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        Self {
            n: self.n,
            bits: self.bits | 1 << pair_index(u.min(v), u.max(v)),
        }
    }

    fn neighbor_mask(&self, v: usize) -> u32 {
        (0..self.n())
            .filter(|&w| self.has_edge(v, w))
            .fold(0, |m, w| m | 1 << w)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.neighbor_mask(v) & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == n
    }

    pub fn to_labeled(&self) -> LabeledGraph {
        let n = self.n();
        let edges = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        LabeledGraph::from_edges(n, edges.filter(|&(u, v)| self.has_edge(u, v)))
            .expect("bit set yields a simple graph")
    }

    /// Bits after renaming vertex `v` to `perm[v]`.
    pub fn permuted_bits(&self, perm: &[usize]) -> u32 {
        let n = self.n();
        let mut out = 0;
        for v in 1..n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    out |= 1 << pair_index(a, b);
                }
            }
        }
        out
    }

    /// Canonical form: the least bit set over relabelings that list vertices
    /// by increasing (degree, sorted neighbor degrees).
    pub fn canonical(&self) -> SmallGraph {
        let n = self.n();
        let deg: Vec<u32> = (0..n).map(|v| self.neighbor_mask(v).count_ones()).collect();
        let invariant: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..n)
                    .filter(|&w| self.has_edge(v, w))
                    .map(|w| deg[w])
                    .collect();
                nd.sort_unstable();
                (deg[v], nd)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
        // Cells: maximal runs of equal invariant in `order`.
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match cells.last_mut() {
                Some(cell) if invariant[cell[0]] == invariant[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let mut perm = vec![0; n];
        let mut best = u32::MAX;
        assign_cells(self, &cells, 0, 0, &mut perm, &mut best);
        SmallGraph {
            n: self.n,
            bits: best,
        }
    }

    /// Canonical form over all `n!` relabelings; slow, used as an oracle.
    pub fn canonical_exhaustive(&self) -> SmallGraph {
        let n = self.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.permuted_bits(&perm);
        permutations(&mut perm, 0, &mut |p| {
            best = best.min(self.permuted_bits(p))
        });
        SmallGraph {
            n: self.n,
            bits: best,
        }
    }

    /// Edge list `1-2+1-3+...`, 1-based, or `empty` without edges.
    pub fn edge_string(&self) -> String {
        let edges: Vec<String> = self
            .to_labeled()
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        if edges.is_empty() {
            "empty".into()
        } else {
            edges.join("+")
        }
    }
}

fn permutations(a: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Gives the vertices of `cells[c..]` the labels `next..` in every order
/// that keeps each cell on a contiguous label range.
fn assign_cells(
    g: &SmallGraph,
    cells: &[Vec<usize>],
    c: usize,
    next: usize,
    perm: &mut [usize],
    best: &mut u32,
) {
    if c == cells.len() {
        *best = (*best).min(g.permuted_bits(perm));
        return;
    }
    let mut cell = cells[c].clone();
    let len = cell.len();
    permutations(&mut cell, 0, &mut |order| {
        for (i, &v) in order.iter().enumerate() {
            perm[v] = next + i;
        }
        assign_cells(g, cells, c + 1, next + len, perm, best);
    });
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, grouped by edge count.
pub fn classes_by_size(n: usize) -> &'static [Vec<SmallGraph>] {
    static CACHE: [OnceLock<Vec<Vec<SmallGraph>>>; ALL_GRAPHS_LIMIT + 1] =
        [const { OnceLock::new() }; ALL_GRAPHS_LIMIT + 1];
    assert!(
        n <= ALL_GRAPHS_LIMIT,
        "small graphs have at most 7 vertices"
    );
    CACHE[n].get_or_init(|| {
        let max = n * n.saturating_sub(1) / 2;
        let mut levels = vec![vec![SmallGraph::empty(n)]];
        for _ in 0..max {
            let mut next = BTreeSet::new();
            for g in levels.last().expect("at least one level") {
                for v in 1..n {
                    for u in 0..v {
                        if !g.has_edge(u, v) {
                            next.insert(g.with_edge(u, v).canonical());
                        }
                    }
                }
            }
            levels.push(next.into_iter().collect());
        }
        levels
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let totals = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            let levels = classes_by_size(n);
            let all: usize = levels.iter().map(Vec::len).sum();
            let conn: usize = levels.iter().flatten().filter(|g| g.is_connected()).count();
            assert_eq!(all, totals[n], "n={n}");
            assert_eq!(conn, connected[n], "n={n}");
        }
    }

    /// Both forms must split the graphs into the same classes.
    fn same_classes(graphs: impl Iterator<Item = SmallGraph>) {
        let pairs: BTreeSet<(SmallGraph, SmallGraph)> = graphs
            .map(|g| (g.canonical(), g.canonical_exhaustive()))
            .collect();
        let fast: BTreeSet<_> = pairs.iter().map(|p| p.0).collect();
        let slow: BTreeSet<_> = pairs.iter().map(|p| p.1).collect();
        assert_eq!(pairs.len(), fast.len());
        assert_eq!(pairs.len(), slow.len());
    }

    #[test]
    fn agrees_with_exhaustive_form() {
        same_classes((0u32..1 << 10).map(|bits| SmallGraph { n: 5, bits }));
        same_classes((0u32..1 << 15).map(|bits| SmallGraph { n: 6, bits }));
    }

    #[test]
    fn relabeling_invariance() {
        let g = SmallGraph::from_labeled(&LabeledGraph::path(6));
        let perm = [3, 0, 5, 1, 4, 2];
        let h = SmallGraph {
            n: 6,
            bits: g.permuted_bits(&perm),
        };
        assert_ne!(g, h);
        assert_eq!(g.canonical(), h.canonical());
        assert_ne!(
            g.canonical(),
            SmallGraph::from_labeled(&LabeledGraph::star(6)).canonical()
        );
    }

    #[test]
    fn round_trip_and_strings() {
        let g = LabeledGraph::cycle(5);
        assert_eq!(SmallGraph::from_labeled(&g).to_labeled(), g);
        assert_eq!(
            SmallGraph::from_labeled(&LabeledGraph::star(3)).edge_string(),
            "1-2+1-3"
        );
        assert_eq!(SmallGraph::empty(2).edge_string(), "empty");
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Stored as a dense adjacency matrix; the graphs handled here have at most a
/// few hundred vertices. The text form (see [`fmt::Display`]) is 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    m: usize,
}

impl LabeledGraph {
    /// The edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
            degrees: vec![0; n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// The star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert(0, v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n > 2 {
            g.insert(0, n - 1);
        }
        g
    }

    /// Builds a graph from 0-indexed vertex pairs. Loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {}-{} has an endpoint outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    u.min(v) + 1,
                    u.max(v) + 1
                )));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.m += 1;
    }

    fn delete(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;
        self.m -= 1;
    }

    /// Returns `G + uv`, or `None` if `uv` is already an edge or a loop.
    pub fn with_edge(&self, u: usize, v: usize) -> Option<Self> {
        if u == v || u >= self.n || v >= self.n || self.has_edge(u, v) {
            return None;
        }
        let mut g = self.clone();
        g.insert(u, v);
        Some(g)
    }

    /// Returns `G - uv`, or `None` if `uv` is not an edge.
    pub fn without_edge(&self, u: usize, v: usize) -> Option<Self> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return None;
        }
        let mut g = self.clone();
        g.delete(u, v);
        Some(g)
    }

    /// Applies a batch of removals and additions at once. Fails if a removed
    /// pair is missing or an added pair is already present.
    pub fn rewired(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in remove {
            if u >= self.n || v >= self.n || !g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "cannot remove missing edge {}-{}",
                    u + 1,
                    v + 1
                )));
            }
            g.delete(u, v);
        }
        for &(u, v) in add {
            if u >= self.n || v >= self.n || u == v || g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!(
                    "cannot add edge {}-{}",
                    u + 1,
                    v + 1
                )));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(u, &e)| if e { Some(u) } else { None })
    }

    /// Edges as 0-indexed pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union `self ∪ other`; `other`'s vertices are shifted by `self.n()`.
    pub fn union(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        for (u, v) in other.edges() {
            g.insert(u + self.n, v + self.n);
        }
        g
    }

    /// Join `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert(u, v + self.n);
            }
        }
        g
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

/// Edge-list text format: a header line `n m`, then one `u v` line per edge
/// with `1 <= u < v <= n`.
impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m)?;
        for (u, v) in self.edges() {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for LabeledGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let (u, v) = parse_pair(line)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!("vertices are 1-indexed: {line:?}")));
            }
            if u >= v {
                return Err(Error::Parse(format!("edge line must have u < v: {line:?}")));
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges but {} were listed",
                edges.len()
            )));
        }
        LabeledGraph::from_edges(n, edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse(format!("expected two integers: {line:?}")))?
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("{line:?}: {e}")))
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens: {line:?}")));
    }
    Ok((a, b))
}

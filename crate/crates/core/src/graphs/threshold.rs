use std::fmt;
use std::str::FromStr;

use super::LabeledGraph;
use crate::error::{Error, Result};

/// How a vertex joins the vertices added before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Isolated,
    Dominating,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Isolated => 'I',
            Step::Dominating => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Result<Self> {
        match c {
            'I' | 'i' => Ok(Step::Isolated),
            'D' | 'd' => Ok(Step::Dominating),
            other => Err(Error::InvalidSymbol(other)),
        }
    }
}

/// A threshold graph, held as its creation sequence.
///
/// Symbol `i` says whether vertex `i` was added isolated or dominating
/// relative to vertices `0..i`. The first symbol is always
/// [`Step::Isolated`]; with that normalization the sequence is a complete
/// isomorphism invariant, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThresholdGraph {
    creation: Vec<Step>,
}

impl ThresholdGraph {
    pub fn from_creation_sequence(creation: Vec<Step>) -> Result<Self> {
        match creation.first() {
            None => Err(Error::EmptySequence),
            Some(Step::Dominating) => Err(Error::LeadingDominating),
            Some(Step::Isolated) => Ok(Self { creation }),
        }
    }

    /// Builds from a sequence whose first symbol may be either; a first
    /// vertex has no predecessors, so both symbols mean the same thing.
    pub(crate) fn normalized(mut creation: Vec<Step>) -> Self {
        assert!(!creation.is_empty(), "creation sequence must be non-empty");
        creation[0] = Step::Isolated;
        Self { creation }
    }

    /// Reconstructs the unique threshold graph with the given non-increasing
    /// degree sequence by repeatedly stripping a dominating or an isolated
    /// vertex.
    pub fn from_degree_sequence(degrees: &[usize]) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        let n = degrees.len();
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDegreeSequence(
                "sequence must be non-increasing".into(),
            ));
        }
        if degrees[0] >= n {
            return Err(Error::InvalidDegreeSequence(format!(
                "degree {} exceeds n-1 = {}",
                degrees[0],
                n - 1
            )));
        }
        // Residual degrees, kept non-increasing.
        let mut rest: Vec<usize> = degrees.to_vec();
        let mut peeled = Vec::with_capacity(n);
        while rest.len() > 1 {
            let r = rest.len();
            if rest[0] == r - 1 {
                rest.remove(0);
                for d in rest.iter_mut() {
                    if *d == 0 {
                        return Err(Error::NotThreshold {
                            peeled: peeled.len(),
                            remaining: r,
                        });
                    }
                    *d -= 1;
                }
                peeled.push(Step::Dominating);
            } else if rest[r - 1] == 0 {
                rest.pop();
                peeled.push(Step::Isolated);
            } else {
                return Err(Error::NotThreshold {
                    peeled: peeled.len(),
                    remaining: r,
                });
            }
        }
        if rest[0] != 0 {
            return Err(Error::NotThreshold {
                peeled: peeled.len(),
                remaining: 1,
            });
        }
        peeled.push(Step::Isolated);
        peeled.reverse();
        Ok(Self { creation: peeled })
    }

    /// Recognizes a labeled graph as threshold by peeling isolated or
    /// dominating vertices off the actual adjacency structure.
    pub fn from_labeled(g: &LabeledGraph) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        let mut alive = vec![true; n];
        let mut deg: Vec<usize> = g.degrees().to_vec();
        let mut peeled = Vec::with_capacity(n);
        for removed in 0..n {
            let r = n - removed;
            let pick = (0..n).filter(|&v| alive[v]).find_map(|v| {
                if r > 1 && deg[v] == r - 1 {
                    Some((v, Step::Dominating))
                } else if deg[v] == 0 {
                    Some((v, Step::Isolated))
                } else {
                    None
                }
            });
            let Some((v, step)) = pick else {
                return Err(Error::NotThreshold {
                    peeled: removed,
                    remaining: r,
                });
            };
            alive[v] = false;
            for u in g.neighbors(v) {
                if alive[u] {
                    deg[u] -= 1;
                }
            }
            peeled.push(step);
        }
        peeled.reverse();
        Ok(Self::normalized(peeled))
    }

    pub fn creation(&self) -> &[Step] {
        &self.creation
    }

    pub fn n(&self) -> usize {
        self.creation.len()
    }

    /// Edge count: a dominating vertex at 0-based position `i` contributes `i`.
    pub fn m(&self) -> usize {
        self.creation
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::Dominating)
            .map(|(i, _)| i)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 1 || self.creation.last() == Some(&Step::Dominating)
    }

    /// Degree of each vertex, indexed by creation position.
    pub fn degrees_by_position(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![0; n];
        let mut later_dominating = 0;
        for i in (0..n).rev() {
            out[i] = later_dominating
                + if self.creation[i] == Step::Dominating {
                    i
                } else {
                    0
                };
            if self.creation[i] == Step::Dominating {
                later_dominating += 1;
            }
        }
        out
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees_by_position();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Creation positions listed in the stepwise vertex order: degree
    /// descending, ties broken by later-added first.
    pub fn stepwise_order(&self) -> Vec<usize> {
        let deg = self.degrees_by_position();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(b.cmp(&a)));
        order
    }

    /// The graph with vertices numbered in stepwise order, so that its
    /// adjacency matrix is a stepwise matrix.
    pub fn to_labeled(&self) -> LabeledGraph {
        let order = self.stepwise_order();
        let mut label = vec![0; self.n()];
        for (new, &pos) in order.iter().enumerate() {
            label[pos] = new;
        }
        let mut edges = Vec::with_capacity(self.m());
        for (j, step) in self.creation.iter().enumerate() {
            if *step == Step::Dominating {
                for i in 0..j {
                    edges.push((label[i], label[j]));
                }
            }
        }
        LabeledGraph::from_edges(self.n(), edges).expect("creation sequence yields a simple graph")
    }
}

impl fmt::Display for ThresholdGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.creation {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for ThresholdGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThresholdGraph({self})")
    }
}

impl FromStr for ThresholdGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(Step::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        Self::from_creation_sequence(steps)
    }
}

/// True if `a` is stepwise: `a[h][k] = 1` with `h > k` forces
/// `a[i][j] = 1` for all `j < i <= h`, `j <= k`.
pub fn is_stepwise(g: &LabeledGraph) -> bool {
    let n = g.n();
    for h in 0..n {
        for k in 0..h {
            if !g.has_edge(h, k) {
                continue;
            }
            for i in 0..=h {
                for j in 0..i.min(k + 1) {
                    if !g.has_edge(i, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tg(s: &str) -> ThresholdGraph {
        s.parse().unwrap()
    }

    #[test]
    fn creation_sequence_errors() {
        assert_eq!(
            ThresholdGraph::from_creation_sequence(vec![]),
            Err(Error::EmptySequence)
        );
        assert_eq!(
            "DI".parse::<ThresholdGraph>(),
            Err(Error::LeadingDominating)
        );
        assert_eq!(
            "IX".parse::<ThresholdGraph>(),
            Err(Error::InvalidSymbol('X'))
        );
    }

    #[test]
    fn single_vertex() {
        let g = tg("I");
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
        assert!(g.is_connected());
        assert_eq!(g.to_labeled().m(), 0);
    }

    #[test]
    fn k5_plus_isolated() {
        let g = tg("IDDDDI");
        assert_eq!(g.m(), 10);
        assert!(!g.is_connected());
        assert_eq!(g.degree_sequence(), vec![4, 4, 4, 4, 4, 0]);
        let expected = LabeledGraph::complete(5).union(&LabeledGraph::empty(1));
        assert_eq!(g.to_labeled(), expected);
    }

    #[test]
    fn star_from_sequence() {
        let g = tg("IIIIID");
        assert_eq!(g.degree_sequence(), vec![5, 1, 1, 1, 1, 1]);
        assert_eq!(g.to_labeled(), LabeledGraph::star(6));
    }

    #[test]
    fn degree_sequence_reconstruction() {
        assert_eq!(
            ThresholdGraph::from_degree_sequence(&[4, 4, 4, 4, 4]).unwrap(),
            tg("IDDDD")
        );
        assert_eq!(
            ThresholdGraph::from_degree_sequence(&[2, 1, 1]).unwrap(),
            tg("IID")
        );
        assert_eq!(
            ThresholdGraph::from_degree_sequence(&[5, 5, 2, 2, 2, 2]).unwrap(),
            tg("IIIIDD")
        );
    }

    #[test]
    fn degree_sequence_failures_report_step() {
        // P_4: (2,2,1,1) has no dominating or isolated vertex.
        assert_eq!(
            ThresholdGraph::from_degree_sequence(&[2, 2, 1, 1]),
            Err(Error::NotThreshold {
                peeled: 0,
                remaining: 4
            })
        );
        // C_4 after nothing peeled.
        assert!(ThresholdGraph::from_degree_sequence(&[2, 2, 2, 2]).is_err());
        assert!(ThresholdGraph::from_degree_sequence(&[1, 2]).is_err());
        assert!(ThresholdGraph::from_degree_sequence(&[3, 1, 1]).is_err());
        assert!(ThresholdGraph::from_degree_sequence(&[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn labeled_recognition_matches_sequence() {
        for s in ["I", "ID", "II", "IDIIDD", "IIDDID", "IDDDDI", "IIIIDD"] {
            let g = tg(s);
            assert_eq!(ThresholdGraph::from_labeled(&g.to_labeled()).unwrap(), g);
        }
        assert!(ThresholdGraph::from_labeled(&LabeledGraph::path(4)).is_err());
        assert!(ThresholdGraph::from_labeled(&LabeledGraph::cycle(4)).is_err());
    }

    #[test]
    fn stepwise_examples() {
        assert!(is_stepwise(&tg("IDIIDD").to_labeled()));
        assert!(!is_stepwise(&LabeledGraph::path(3)));
        assert!(is_stepwise(&LabeledGraph::star(3)));
    }
}

//! Threshold graphs: representation, recognition and the named families.

mod construct;
mod ferrers;
mod labeled;
mod threshold;

pub use construct::{l_graph, max_edges, quasi_star, split_params, tilde_s, SplitParams};
pub use ferrers::{ferrers_matrix, FerrersCell, FerrersMatrix};
pub use labeled::LabeledGraph;
pub use threshold::{is_stepwise, Step, ThresholdGraph};

/// The three induced subgraphs excluded from threshold graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenSubgraph {
    TwoK2,
    C4,
    P4,
}

/// Finds four vertices inducing `2K_2`, `C_4` or `P_4`, if any.
pub fn find_forbidden_subgraph(g: &LabeledGraph) -> Option<([usize; 4], ForbiddenSubgraph)> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let mut deg = [0u8; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(quad[i], quad[j]) {
                                deg[i] += 1;
                                deg[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    deg.sort_unstable();
                    let kind = match (edges, deg) {
                        (2, [1, 1, 1, 1]) => Some(ForbiddenSubgraph::TwoK2),
                        (3, [1, 1, 2, 2]) => Some(ForbiddenSubgraph::P4),
                        (4, [2, 2, 2, 2]) => Some(ForbiddenSubgraph::C4),
                        _ => None,
                    };
                    if let Some(kind) = kind {
                        return Some((quad, kind));
                    }
                }
            }
        }
    }
    None
}

/// True iff `g` has no induced `2K_2`, `C_4` or `P_4`.
pub fn is_threshold(g: &LabeledGraph) -> bool {
    find_forbidden_subgraph(g).is_none()
}

/// Threshold test by repeatedly deleting an isolated or dominating vertex.
pub fn is_threshold_by_reduction(g: &LabeledGraph) -> bool {
    g.n() == 0 || ThresholdGraph::from_labeled(g).is_ok()
}

pub fn join(g1: &LabeledGraph, g2: &LabeledGraph) -> LabeledGraph {
    g1.join(g2)
}

pub fn union(g1: &LabeledGraph, g2: &LabeledGraph) -> LabeledGraph {
    g1.union(g2)
}

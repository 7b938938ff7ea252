use super::family::{FamilySpec, Universe};
use crate::error::{Error, Result};
use crate::graphs::{Step, ThresholdGraph};

/// Partial assignment: values `top+1..n-1` are decided (a value `v` stands
/// for a dominating vertex at 0-based position `v`, contributing `v` edges).
#[derive(Clone, Copy, Debug)]
struct Frame {
    top: usize,
    remaining: usize,
    mask: u64,
}

/// Depth-first walk over creation sequences of a fixed order and size,
/// pruning branches whose remaining positions cannot reach the target.
#[derive(Clone, Debug)]
pub struct ThresholdEnumerator {
    n: usize,
    stack: Vec<Frame>,
}

/// Largest edge count reachable with dominating vertices among positions
/// `1..=top`.
fn reachable(top: usize) -> usize {
    top * (top + 1) / 2
}

impl ThresholdEnumerator {
    fn new(f: &FamilySpec) -> Self {
        let n = f.n;
        let mut root = Frame {
            top: n - 1,
            remaining: f.m,
            mask: 0,
        };
        if f.connected_only && n > 1 {
            root = Frame {
                top: n - 2,
                remaining: f.m - (n - 1),
                mask: 1 << (n - 1),
            };
        }
        Self {
            n,
            stack: vec![root],
        }
    }

    fn build(&self, mask: u64) -> ThresholdGraph {
        let steps = (0..self.n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Step::Dominating
                } else {
                    Step::Isolated
                }
            })
            .collect();
        ThresholdGraph::from_creation_sequence(steps).expect("position 0 is never dominating")
    }

    /// Splits the remaining walk into independent pieces by fixing the
    /// highest undecided positions, until there are at least `pieces`
    /// frames or nothing is left to split. Concatenating the pieces' outputs
    /// gives the same multiset as the original walk.
    pub fn split(mut self, pieces: usize) -> Vec<ThresholdEnumerator> {
        let mut frames: Vec<Frame> = std::mem::take(&mut self.stack);
        loop {
            if frames.len() >= pieces {
                break;
            }
            let mut next = Vec::with_capacity(frames.len() * 2);
            let mut progressed = false;
            for f in frames {
                if f.remaining == 0 || f.top == 0 {
                    next.push(f);
                    continue;
                }
                progressed = true;
                next.extend(children(f));
            }
            frames = next;
            if !progressed {
                break;
            }
        }
        frames
            .into_iter()
            .filter(|f| f.remaining <= reachable(f.top))
            .map(|f| ThresholdEnumerator {
                n: self.n,
                stack: vec![f],
            })
            .collect()
    }
}

/// Children of a frame: the highest undecided position as dominating, then
/// as isolated, dropping branches that cannot reach the target.
fn children(f: Frame) -> impl Iterator<Item = Frame> {
    let v = f.top;
    let take = (v <= f.remaining).then(|| Frame {
        top: v - 1,
        remaining: f.remaining - v,
        mask: f.mask | 1 << v,
    });
    let skip = Frame {
        top: v - 1,
        remaining: f.remaining,
        mask: f.mask,
    };
    take.into_iter()
        .chain(std::iter::once(skip))
        .filter(|c| c.remaining <= reachable(c.top))
}

impl Iterator for ThresholdEnumerator {
    type Item = ThresholdGraph;

    fn next(&mut self) -> Option<ThresholdGraph> {
        while let Some(f) = self.stack.pop() {
            if f.remaining == 0 {
                return Some(self.build(f.mask));
            }
            if f.top == 0 || f.remaining > reachable(f.top) {
                continue;
            }
            // Push isolated first so the dominating branch is explored first.
            let kids: Vec<Frame> = children(f).collect();
            self.stack.extend(kids.into_iter().rev());
        }
        None
    }
}

/// Every threshold graph in the family, once each.
pub fn enumerate_threshold(f: &FamilySpec) -> Result<ThresholdEnumerator> {
    f.check()?;
    if f.universe != Universe::Threshold {
        return Err(Error::InfeasibleFamily(
            "expected the threshold universe".into(),
        ));
    }
    Ok(ThresholdEnumerator::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{max_edges, quasi_star};

    fn family(n: usize, m: usize, connected: bool) -> FamilySpec {
        FamilySpec::new(n, m, connected, Universe::Threshold).unwrap()
    }

    /// All `2^(n-1)` sequences, filtered.
    fn brute(n: usize, m: usize, connected: bool) -> Vec<String> {
        let mut out: Vec<String> = (0u64..1 << (n - 1))
            .map(|bits| {
                std::iter::once('I')
                    .chain((1..n).map(|i| if bits >> (i - 1) & 1 == 1 { 'D' } else { 'I' }))
                    .collect::<String>()
            })
            .filter(|s| {
                let g: ThresholdGraph = s.parse().unwrap();
                g.m() == m && (!connected || g.is_connected())
            })
            .collect();
        out.sort();
        out
    }

    fn listed(f: &FamilySpec) -> Vec<String> {
        let mut v: Vec<String> = enumerate_threshold(f)
            .unwrap()
            .map(|g| g.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..11 {
            for m in 0..=max_edges(n) {
                assert_eq!(
                    listed(&family(n, m, false)),
                    brute(n, m, false),
                    "n={n} m={m}"
                );
                if m + 1 >= n {
                    assert_eq!(
                        listed(&family(n, m, true)),
                        brute(n, m, true),
                        "n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(listed(&family(4, 3, true)), vec!["IIID"]);
        assert!(listed(&family(6, 10, true)).contains(&quasi_star(6, 10).unwrap().to_string()));
        assert!(listed(&family(6, 10, false)).contains(&"IDDDDI".to_string()));
    }

    #[test]
    fn totals() {
        for n in 2..13 {
            let all: usize = (0..=max_edges(n))
                .map(|m| enumerate_threshold(&family(n, m, false)).unwrap().count())
                .sum();
            assert_eq!(all, 1 << (n - 1));
            let conn: usize = (n - 1..=max_edges(n))
                .map(|m| enumerate_threshold(&family(n, m, true)).unwrap().count())
                .sum();
            assert_eq!(conn, 1 << (n - 2));
        }
    }

    #[test]
    fn split_preserves_output() {
        for (n, m, c) in [
            (10, 20, true),
            (12, 30, false),
            (24, 48, true),
            (5, 0, false),
        ] {
            let f = family(n, m, c);
            let whole = listed(&f);
            for pieces in [1, 2, 7, 64] {
                let mut parts: Vec<String> = enumerate_threshold(&f)
                    .unwrap()
                    .split(pieces)
                    .into_iter()
                    .flatten()
                    .map(|g| g.to_string())
                    .collect();
                parts.sort();
                assert_eq!(parts, whole, "n={n} m={m} pieces={pieces}");
            }
        }
    }
}

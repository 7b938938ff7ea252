use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// 1-based vertex pairs.
pub type EdgeList = Vec<(usize, usize)>;

/// Which edge-rewiring pattern a [`TransformSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    /// Move the single edge `v_h v_k` to `v_p v_q`.
    Basic,
    /// Move `v_h v_k, ..., v_h v_{k+l}` to `v_p v_q, ..., v_{p-l} v_q`.
    Row,
    /// Move `v_h v_k, ..., v_{h-l} v_k` to `v_p v_q, ..., v_p v_{q-l}`.
    Col,
}

impl TransformKind {
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Basic => "BASIC",
            TransformKind::Row => "ROW",
            TransformKind::Col => "COL",
        }
    }
}

/// Parameters of one transformation. Indices are 1-based positions in the
/// stepwise (degree-descending) order of the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformSpec {
    pub kind: TransformKind,
    pub p: usize,
    pub q: usize,
    pub h: usize,
    pub k: usize,
    /// Width; always 0 for `Basic`.
    pub l: usize,
}

/// The four indices that enter the eigen-equation identities once the width
/// is folded in: rows `h` and `p` of the host have neighborhoods
/// `{1..big_k}` and `{1..big_q - 1}`, and in the result rows `q` and `k`
/// have neighborhoods `{1..big_p}` and `{1..big_h - 1}` (each minus itself).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EffectiveIndices {
    pub big_k: usize,
    pub big_q: usize,
    pub big_p: usize,
    pub big_h: usize,
}

impl TransformSpec {
    pub fn basic(p: usize, q: usize, h: usize, k: usize) -> Self {
        Self {
            kind: TransformKind::Basic,
            p,
            q,
            h,
            k,
            l: 0,
        }
    }

    pub fn row(p: usize, q: usize, h: usize, k: usize, l: usize) -> Self {
        Self {
            kind: TransformKind::Row,
            p,
            q,
            h,
            k,
            l,
        }
    }

    pub fn col(p: usize, q: usize, h: usize, k: usize, l: usize) -> Self {
        Self {
            kind: TransformKind::Col,
            p,
            q,
            h,
            k,
            l,
        }
    }

    /// Largest vertex index mentioned.
    pub fn max_index(&self) -> usize {
        self.p.max(self.q).max(self.h).max(self.k)
    }

    /// Edges removed and added, 1-based, in the host's stepwise labeling.
    /// Panics if the spec's arithmetic underflows; validate first.
    pub fn edge_moves(&self) -> (EdgeList, EdgeList) {
        let (p, q, h, k) = (self.p, self.q, self.h, self.k);
        (0..=self.l)
            .map(|j| match self.kind {
                TransformKind::Basic => ((h, k), (p, q)),
                TransformKind::Row => ((h, k + j), (p - j, q)),
                TransformKind::Col => ((h - j, k), (p, q - j)),
            })
            .unzip()
    }

    pub fn effective_indices(&self) -> EffectiveIndices {
        let (p, q, h, k, l) = (self.p, self.q, self.h, self.k, self.l);
        match self.kind {
            TransformKind::Basic => EffectiveIndices {
                big_k: k,
                big_q: q,
                big_p: p,
                big_h: h,
            },
            TransformKind::Row => EffectiveIndices {
                big_k: k + l,
                big_q: q,
                big_p: p,
                big_h: h,
            },
            TransformKind::Col => EffectiveIndices {
                big_k: k,
                big_q: q - l,
                big_p: p,
                big_h: h - l,
            },
        }
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.kind.name(),
            self.p,
            self.q,
            self.h,
            self.k
        )?;
        if self.kind != TransformKind::Basic {
            write!(f, " {}", self.l)?;
        }
        Ok(())
    }
}

/// `BASIC p q h k`, `ROW p q h k l` or `COL p q h k l`.
impl FromStr for TransformSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let kind = match parts.next().map(|w| w.to_ascii_uppercase()).as_deref() {
            Some("BASIC") => TransformKind::Basic,
            Some("ROW") => TransformKind::Row,
            Some("COL") => TransformKind::Col,
            _ => {
                return Err(Error::Parse(format!(
                    "transformation must start with BASIC, ROW or COL: {s:?}"
                )))
            }
        };
        let nums = parts
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let want = if kind == TransformKind::Basic { 4 } else { 5 };
        if nums.len() != want {
            return Err(Error::Parse(format!(
                "{} takes {want} indices, got {}",
                kind.name(),
                nums.len()
            )));
        }
        let l = if want == 5 { nums[4] } else { 0 };
        Ok(Self {
            kind,
            p: nums[0],
            q: nums[1],
            h: nums[2],
            k: nums[3],
            l,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in ["BASIC 6 2 5 3", "ROW 7 2 5 3 1", "COL 9 3 8 4 1"] {
            let spec: TransformSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "row 7 2 5 3 1".parse::<TransformSpec>().unwrap(),
            TransformSpec::row(7, 2, 5, 3, 1)
        );
    }

    #[test]
    fn parse_errors() {
        assert!("BASIC 1 2 3".parse::<TransformSpec>().is_err());
        assert!("ROW 1 2 3 4".parse::<TransformSpec>().is_err());
        assert!("SWAP 1 2 3 4".parse::<TransformSpec>().is_err());
        assert!("COL 1 2 x 4 0".parse::<TransformSpec>().is_err());
        assert!("".parse::<TransformSpec>().is_err());
    }

    #[test]
    fn moves() {
        let (rm, add) = TransformSpec::row(7, 2, 5, 3, 1).edge_moves();
        assert_eq!(rm, vec![(5, 3), (5, 4)]);
        assert_eq!(add, vec![(7, 2), (6, 2)]);
        let (rm, add) = TransformSpec::col(9, 3, 8, 4, 1).edge_moves();
        assert_eq!(rm, vec![(8, 4), (7, 4)]);
        assert_eq!(add, vec![(9, 3), (9, 2)]);
        let (rm, add) = TransformSpec::basic(6, 2, 5, 3).edge_moves();
        assert_eq!((rm, add), (vec![(5, 3)], vec![(6, 2)]));
    }
}

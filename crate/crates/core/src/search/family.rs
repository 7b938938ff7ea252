use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::max_edges;

/// Largest order for which every graph is enumerated up to isomorphism.
pub const ALL_GRAPHS_LIMIT: usize = 7;

/// Largest order for threshold enumeration (creation sequences fit a `u64`).
pub const THRESHOLD_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    Threshold,
    All,
}

/// Graphs of order `n` and size `m`, either all of them or only the
/// connected ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub n: usize,
    pub m: usize,
    pub connected_only: bool,
    pub universe: Universe,
}

impl FamilySpec {
    pub fn new(n: usize, m: usize, connected_only: bool, universe: Universe) -> Result<Self> {
        let f = Self {
            n,
            m,
            connected_only,
            universe,
        };
        f.check()?;
        Ok(f)
    }

    pub fn connected_threshold(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, true, Universe::Threshold)
    }

    pub fn check(&self) -> Result<()> {
        let (n, m) = (self.n, self.m);
        if n == 0 {
            return Err(Error::InfeasibleFamily("n must be positive".into()));
        }
        let limit = match self.universe {
            Universe::Threshold => THRESHOLD_LIMIT,
            Universe::All => ALL_GRAPHS_LIMIT,
        };
        if n > limit {
            return Err(Error::TooLarge { n, limit });
        }
        let min = if self.connected_only { n - 1 } else { 0 };
        if m < min || m > max_edges(n) {
            return Err(Error::InfeasibleFamily(format!(
                "no {}graph with n={n}, m={m}",
                if self.connected_only {
                    "connected "
                } else {
                    ""
                }
            )));
        }
        Ok(())
    }

    /// `H` for connected graphs, `G` otherwise.
    pub fn tag(&self) -> char {
        if self.connected_only {
            'H'
        } else {
            'G'
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={},n={},m={}", self.tag(), self.n, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasibility() {
        assert!(FamilySpec::connected_threshold(6, 10).is_ok());
        assert!(FamilySpec::connected_threshold(6, 4).is_err());
        assert!(FamilySpec::new(6, 4, false, Universe::Threshold).is_ok());
        assert!(FamilySpec::new(6, 16, false, Universe::Threshold).is_err());
        assert_eq!(
            FamilySpec::new(8, 10, true, Universe::All),
            Err(Error::TooLarge { n: 8, limit: 7 })
        );
        assert!(FamilySpec::new(0, 0, false, Universe::All).is_err());
        assert!(FamilySpec::new(1, 0, true, Universe::All).is_ok());
    }

    #[test]
    fn display() {
        let f = FamilySpec::new(6, 10, false, Universe::Threshold).unwrap();
        assert_eq!(f.to_string(), "family=G,n=6,m=10");
    }
}

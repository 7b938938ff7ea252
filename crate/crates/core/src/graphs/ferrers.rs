use std::fmt;

use super::LabeledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FerrersCell {
    /// Diagonal position.
    Plus,
    Filled,
    Empty,
}

/// The `n x n` Ferrers diagram of a graph's non-increasing degree sequence:
/// `+` on the diagonal, row `i` holding `d_i` filled cells packed to the left
/// among its off-diagonal positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerrersMatrix {
    cells: Vec<Vec<FerrersCell>>,
}

impl FerrersMatrix {
    pub fn from_degree_sequence(degrees: &[usize]) -> Self {
        let n = degrees.len();
        let cells = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut remaining = d;
                (0..n)
                    .map(|j| {
                        if i == j {
                            FerrersCell::Plus
                        } else if remaining > 0 {
                            remaining -= 1;
                            FerrersCell::Filled
                        } else {
                            FerrersCell::Empty
                        }
                    })
                    .collect()
            })
            .collect();
        Self { cells }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, i: usize, j: usize) -> FerrersCell {
        self.cells[i][j]
    }

    pub fn rows(&self) -> &[Vec<FerrersCell>] {
        &self.cells
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| self.cells[i][j] == self.cells[j][i]))
    }
}

/// Renders rows with `+`, `*` (filled) and `o` (empty), space separated.
impl fmt::Display for FerrersMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.cells {
            let line: Vec<&str> = row
                .iter()
                .map(|c| match c {
                    FerrersCell::Plus => "+",
                    FerrersCell::Filled => "*",
                    FerrersCell::Empty => "o",
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn ferrers_matrix(g: &LabeledGraph) -> FerrersMatrix {
    FerrersMatrix::from_degree_sequence(&g.degree_sequence())
}

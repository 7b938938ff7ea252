use num_traits::{Num, ToPrimitive};

use super::matrix::SquareMatrix;
use super::Rational;
use crate::error::{Error, Result};

/// Matrix entry type for quotient matrices: exact rationals or floats
/// compared with a relative tolerance.
pub trait Scalar: Num + Clone + std::fmt::Debug {
    fn from_count(c: usize) -> Self;
    fn approx_eq(&self, other: &Self) -> bool;
    fn to_f64(&self) -> f64;
}

impl Scalar for Rational {
    fn from_count(c: usize) -> Self {
        Rational::from_integer(c as i64)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("ratio of i64 converts to f64")
    }
}

impl Scalar for f64 {
    fn from_count(c: usize) -> Self {
        c as f64
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= 1e-12 * self.abs().max(other.abs()).max(1.0)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Block-average row sums of a matrix over a vertex partition.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix<T> {
    pub partition: Vec<Vec<usize>>,
    /// `entries[(i, j)]` is the average over rows in block `i` of the row sums
    /// restricted to columns in block `j`.
    pub entries: SquareMatrix<T>,
    /// Every block has constant row sums.
    pub equitable: bool,
}

fn check_partition(n: usize, partition: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for block in partition {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &v in block {
            if v >= n {
                return Err(Error::InvalidPartition(format!(
                    "index {v} out of range for n={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPartition(format!("index {v} appears twice")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPartition(format!("index {v} is not covered")));
    }
    Ok(())
}

/// Quotient of `m` over `partition` (0-based vertex sets).
pub fn quotient_matrix<T: Scalar>(
    m: &SquareMatrix<T>,
    partition: &[Vec<usize>],
) -> Result<QuotientMatrix<T>> {
    check_partition(m.n(), partition)?;
    let k = partition.len();
    let mut entries = SquareMatrix::zeros(k);
    let mut equitable = true;
    for (i, rows) in partition.iter().enumerate() {
        for (j, cols) in partition.iter().enumerate() {
            let sums: Vec<T> = rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .fold(T::zero(), |acc, &c| acc + m[(r, c)].clone())
                })
                .collect();
            equitable &= sums.iter().all(|s| s.approx_eq(&sums[0]));
            let total = sums.into_iter().fold(T::zero(), |a, b| a + b);
            entries[(i, j)] = total / T::from_count(rows.len());
        }
    }
    Ok(QuotientMatrix {
        partition: partition.to_vec(),
        entries,
        equitable,
    })
}

impl<T: Scalar> QuotientMatrix<T> {
    pub fn to_f64(&self) -> SquareMatrix<f64> {
        self.entries.map(Scalar::to_f64)
    }
}

/// Shorthand for building a partition from 1-based inclusive index ranges.
pub fn partition_from_ranges(ranges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    ranges.iter().map(|&(a, b)| (a - 1..b).collect()).collect()
}

use num_traits::Num;

use super::matrix::SquareMatrix;
use crate::error::{Error, Result};

/// Largest matrix handled by [`char_poly`].
pub const CHAR_POLY_LIMIT: usize = 6;

fn poly_add<T: Num + Clone>(a: &mut Vec<T>, b: &[T]) {
    if a.len() < b.len() {
        a.resize(b.len(), T::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + y.clone();
    }
}

fn poly_mul<T: Num + Clone>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Determinant of the rows `row..` and the columns in `cols` by expansion
/// along the first remaining row.
fn det_minor<T: Num + Clone>(entries: &[Vec<Vec<T>>], row: usize, cols: &[usize]) -> Vec<T> {
    if cols.is_empty() {
        return vec![T::one()];
    }
    let mut total = Vec::new();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &entries[row][c];
        if entry.iter().all(|x| x.is_zero()) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let mut term = poly_mul(entry, &det_minor(entries, row + 1, &rest));
        if pos % 2 == 1 {
            term.iter_mut().for_each(|x| *x = T::zero() - x.clone());
        }
        poly_add(&mut total, &term);
    }
    total
}

/// Coefficients of `det(xI - M)` in ascending powers of `x`; the last entry
/// is 1. Exact for integer or rational entries.
pub fn char_poly<T: Num + Clone>(m: &SquareMatrix<T>) -> Result<Vec<T>> {
    let k = m.n();
    if k > CHAR_POLY_LIMIT {
        return Err(Error::MatrixTooLarge {
            size: k,
            limit: CHAR_POLY_LIMIT,
        });
    }
    let entries: Vec<Vec<Vec<T>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let c = T::zero() - m[(i, j)].clone();
                    if i == j {
                        vec![c, T::one()]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..k).collect();
    let mut p = det_minor(&entries, 0, &cols);
    p.resize(k + 1, T::zero());
    Ok(p)
}

pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Largest real root of a polynomial whose roots are all real, by Newton's
/// method started at the Cauchy bound (ascending coefficients, nonzero
/// leading term).
pub fn largest_real_root(coeffs: &[f64]) -> f64 {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    assert!(deg >= 1 && lead != 0.0, "need a nonconstant polynomial");
    let bound = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let deriv: Vec<f64> = (1..=deg).map(|i| i as f64 * coeffs[i]).collect();
    let mut x = bound;
    for _ in 0..10_000 {
        let d = eval(&deriv, x);
        if d == 0.0 {
            break;
        }
        let step = eval(coeffs, x) / d;
        x -= step;
        if step.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::Rational;

    #[test]
    fn one_by_one() {
        let m = SquareMatrix::from_rows(vec![vec![7i64]]);
        assert_eq!(char_poly(&m).unwrap(), vec![-7, 1]);
    }

    #[test]
    fn two_by_two_and_identity() {
        let m = SquareMatrix::from_rows(vec![vec![1i64, 2], vec![3, 4]]);
        // x^2 - 5x - 2
        assert_eq!(char_poly(&m).unwrap(), vec![-2, -5, 1]);
        let mut id = SquareMatrix::<i64>::zeros(4);
        for i in 0..4 {
            id[(i, i)] = 1;
        }
        // (x - 1)^4
        assert_eq!(char_poly(&id).unwrap(), vec![1, -4, 6, -4, 1]);
    }

    #[test]
    fn rational_entries() {
        let h = Rational::new(1, 2);
        let z = Rational::from_integer(0);
        let m = SquareMatrix::from_rows(vec![vec![h, h], vec![h, h]]);
        assert_eq!(
            char_poly(&m).unwrap(),
            vec![z, Rational::from_integer(-1), Rational::from_integer(1)]
        );
    }

    #[test]
    fn too_large() {
        let m = SquareMatrix::<i64>::zeros(7);
        assert_eq!(
            char_poly(&m),
            Err(Error::MatrixTooLarge { size: 7, limit: 6 })
        );
    }

    #[test]
    fn roots() {
        // (x-1)(x-2)(x-5)
        assert!((largest_real_root(&[-10.0, 17.0, -8.0, 1.0]) - 5.0).abs() < 1e-12);
        // (x-2)(x-3)^2, double root at the top
        assert!((largest_real_root(&[-18.0, 21.0, -8.0, 1.0]) - 3.0).abs() < 1e-7);
        assert!((largest_real_root(&[-3.0, 1.0]) - 3.0).abs() < 1e-15);
    }
}

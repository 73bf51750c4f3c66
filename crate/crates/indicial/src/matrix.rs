//! Polynomial matrices and fraction-free (Bareiss) determinants.
//!
//! Bareiss elimination keeps every intermediate entry equal to a minor of
//! the input matrix, so over an integral domain with exact division the
//! entries stay in the domain and never grow past the size of the final
//! determinant. This is what keeps the Hurwitz determinants over Q[c]
//! tractable as n grows.

use crate::poly::{Coeff, Polynomial};
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::Zero;
use std::ops::Div;

/// Exact division in an integral domain; `None` when the divisor does not
/// divide exactly.
pub trait ExactDivide: Sized {
    fn exact_divide(&self, d: &Self) -> Option<Self>;
}

impl ExactDivide for Rat {
    fn exact_divide(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

impl ExactDivide for Int {
    fn exact_divide(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl<T: Coeff + Div<Output = T>> ExactDivide for Polynomial<T> {
    fn exact_divide(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        self.exact_div(d).ok()
    }
}

/// Row-major matrix of univariate polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<T>>,
}

impl<T: Coeff> PolyMatrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial<T>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial<T> {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial<T>] {
        &self.entries
    }
}

impl<T: Coeff + Div<Output = T>> PolyMatrix<T> {
    /// Exact determinant by fraction-free elimination.
    pub fn bareiss_det(&self) -> Result<Polynomial<T>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        bareiss_det_generic(self.rows, |i, j| self.at(i, j).clone())
    }
}

/// Generic fraction-free determinant with row pivoting (a zero pivot means
/// the leading minor vanishes; rows are swapped and the sign tracked).
pub fn bareiss_det_generic<T>(n: usize, mut entry: impl FnMut(usize, usize) -> T) -> Result<T>
where
    T: Clone + Zero + PartialEq + std::ops::Mul<Output = T> + std::ops::Sub<Output = T> + std::ops::Neg<Output = T> + ExactDivide,
{
    if n == 0 {
        return Err(Error::NonSquareMatrix { rows: 0, cols: 0 });
    }
    let mut m: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut sign_flip = false;
    let mut prev = None::<T>;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(T::zero());
            };
            m.swap(k, swap);
            sign_flip = !sign_flip;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * pivot.clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = match &prev {
                    None => num,
                    Some(p) => num
                        .exact_divide(p)
                        .ok_or(Error::InexactDivision)?,
                };
            }
            m[i][k] = T::zero();
        }
        prev = Some(pivot);
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Leading principal minors `D_1, ..., D_n` of an integer matrix, computed
/// as the Bareiss pivots (no row exchanges, so the pivots ARE the minors).
/// Returns the minors up to and including the first zero one; the caller
/// sees fewer than `n` entries exactly when some leading minor vanishes.
pub fn leading_principal_minors(m: &[Vec<Int>]) -> Vec<Int> {
    let n = m.len();
    let mut w: Vec<Vec<Int>> = m.to_vec();
    let mut out = Vec::with_capacity(n);
    let mut prev = Int::from(1);
    for k in 0..n {
        let pivot = w[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_zero() {
            return out;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &w[i][j] * &pivot - &w[i][k] * &w[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                w[i][j] = q;
            }
            w[i][k] = Int::zero();
        }
        prev = pivot;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly_from_ints;
        use crate::QPoly;

    fn c(v: i64) -> QPoly {
        qpoly_from_ints(&[v])
    }

    #[test]
    fn two_by_two_in_c() {
        // [[c, 1], [1, c]] -> c^2 - 1
        let x = QPoly::x();
        let m = PolyMatrix::from_fn(2, 2, |i, j| if i == j { x.clone() } else { c(1) });
        assert_eq!(m.bareiss_det().unwrap(), qpoly_from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn non_square_is_an_error() {
        let m = PolyMatrix::from_fn(2, 3, |_, _| c(1));
        assert!(matches!(
            m.bareiss_det(),
            Err(Error::NonSquareMatrix { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn zero_pivot_needs_a_swap() {
        // [[0, 1], [1, 0]] -> -1
        let m = PolyMatrix::from_fn(2, 2, |i, j| if i == j { c(0) } else { c(1) });
        assert_eq!(m.bareiss_det().unwrap(), c(-1));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let m = PolyMatrix::from_fn(3, 3, |i, _| c(i as i64));
        assert!(m.bareiss_det().unwrap().is_zero());
    }

    #[test]
    fn integer_minors_match_definition() {
        let m = vec![
            vec![Int::from(2), Int::from(1), Int::from(0)],
            vec![Int::from(1), Int::from(3), Int::from(2)],
            vec![Int::from(0), Int::from(1), Int::from(4)],
        ];
        let minors = leading_principal_minors(&m);
        assert_eq!(minors, vec![Int::from(2), Int::from(5), Int::from(16)]);
    }
}

//! Hermite and Smith normal forms over a Euclidean integer type.
//!
//! Pivoting is fixed: the pivot is the entry of smallest absolute value,
//! ties broken by lowest index (row-major in the Smith case). Remainders are
//! always taken in `[0, |pivot|)`. Together this makes every output a pure
//! function of the input matrix.

use crate::matrix::Matrix;
use crate::scalar::{div_rem_nonneg, IntegerScalar};

/// Row-style Hermite normal form `U·M = H`.
///
/// `H` is in echelon form: the pivot of row `i` sits in column `pivots[i]`,
/// pivot columns increase strictly, pivots are positive, entries above a pivot
/// lie in `[0, pivot)` and everything below a pivot is zero. Rows
/// `rank..` of `H` are zero, and the matching rows of `U` span the left kernel
/// of `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hermite<T> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `U·M·V = S` with `U`, `V` unimodular and `S` diagonal with the divisibility
/// chain `s_1 | s_2 | …` on its nonnegative diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithDecomposition<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntegerScalar> SmithDecomposition<T> {
    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn smallest_in_column<T: IntegerScalar>(h: &Matrix<T>, col: usize, from: usize) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for i in from..h.rows() {
        let x = &h[(i, col)];
        if x.is_zero() {
            continue;
        }
        let a = x.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            best = Some((i, a));
        }
    }
    best.map(|(i, _)| i)
}

pub fn hnf<T: IntegerScalar>(m: &Matrix<T>) -> Hermite<T> {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = Matrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        let mut found = false;
        while let Some(p) = smallest_in_column(&h, c, r) {
            found = true;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let (q, rem) = div_rem_nonneg(&h[(i, c)], &h[(r, c)]);
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
                if !rem.is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let (q, _) = div_rem_nonneg(&h[(i, c)], &h[(r, c)]);
            let f = -q;
            h.add_row_multiple(i, r, &f);
            u.add_row_multiple(i, r, &f);
        }
        pivots.push(c);
        r += 1;
    }
    Hermite { h, u, rank: r, pivots }
}

fn smallest_in_block<T: IntegerScalar>(s: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for i in k..s.rows() {
        for j in k..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(ij, _)| ij)
}

pub fn snf<T: IntegerScalar>(m: &Matrix<T>) -> SmithDecomposition<T> {
    let (rows, cols) = m.shape();
    let mut s = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_in_block(&s, k) else {
                return SmithDecomposition { u, s, v };
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let (q, rem) = div_rem_nonneg(&s[(i, k)], &s[(k, k)]);
                let f = -q;
                s.add_row_multiple(i, k, &f);
                u.add_row_multiple(i, k, &f);
                clean &= rem.is_zero();
            }
            for j in k + 1..cols {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let (q, rem) = div_rem_nonneg(&s[(k, j)], &s[(k, k)]);
                let f = -q;
                s.add_col_multiple(j, k, &f);
                v.add_col_multiple(j, k, &f);
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = s[(k, k)].clone();
            let offender = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !(s[(i, j)].clone() % pivot.clone()).is_zero()));
            match offender {
                Some(i) => {
                    s.add_row_multiple(k, i, &T::one());
                    u.add_row_multiple(k, i, &T::one());
                }
                None => break,
            }
        }
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithDecomposition { u, s, v }
}

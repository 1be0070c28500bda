//! Smith normal form over ℤ with the transforming unimodular factors.
//!
//! Pivoting picks the nonzero entry of least absolute value in the active
//! submatrix, breaking ties by the smallest `(row, col)`. Each pass reduces
//! the pivot row and column by Euclidean division; a nonzero remainder
//! forces a strictly smaller pivot on the next pass, which bounds the loop.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `d == u * a * v` with `u`, `v` unimodular and `d` rectangular-diagonal
/// with nonnegative entries forming a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The `min(rows, cols)` diagonal entries of `d`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks every structural property against the original input.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let (r, c) = (a.rows(), a.cols());
        if self.u.rows() != r || !self.u.is_square() || self.v.rows() != c || !self.v.is_square() {
            return false;
        }
        if self.u.mul(a).mul(&self.v) != self.d {
            return false;
        }
        if !self.u.determinant().abs().is_one() || !self.v.determinant().abs().is_one() {
            return false;
        }
        for i in 0..r {
            for j in 0..c {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(Signed::is_negative) {
            return false;
        }
        diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        })
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (r, c) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    'outer: for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&d, t) else {
                break 'outer;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(i, t)].div_rem(&d[(t, t)]);
                let q = -q;
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= rem.is_zero();
            }
            for j in t + 1..c {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (q, rem) = d[(t, j)].div_rem(&d[(t, t)]);
                let q = -q;
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }

            if let Some(i) = first_nondivisible_row(&d, t) {
                let one = BigInt::one();
                d.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }

            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }

    SnfResult { u, d, v }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn first_nondivisible_row(d: &IntMatrix, t: usize) -> Option<usize> {
    let p = &d[(t, t)];
    for i in t + 1..d.rows() {
        for j in t + 1..d.cols() {
            if !d[(i, j)].is_multiple_of(p) {
                return Some(i);
            }
        }
    }
    None
}

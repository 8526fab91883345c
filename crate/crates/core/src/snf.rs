//! Smith normal form over an exact integer ring.
//!
//! Elimination with minimal-absolute-value pivoting. Transforms are tracked
//! only when requested; homology needs the diagonal alone.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal,
/// `d_1 | d_2 | ...`, all diagonal entries nonnegative.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    /// Nonzero diagonal entries in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form<T: Scalar>(m: &Matrix<T>) -> SmithForm<T> {
    let mut d = m.clone();
    let mut u = Matrix::identity(m.rows());
    let mut v = Matrix::identity(m.cols());
    diagonalize(&mut d, Some(&mut u), Some(&mut v));
    SmithForm { d, u, v }
}

/// Nonzero invariant factors of `m` (its rank is the length).
pub fn invariant_factors<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let mut d = m.clone();
    diagonalize(&mut d, None, None);
    (0..d.rows().min(d.cols()))
        .map(|i| d[(i, i)].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

fn min_abs_in_block<T: Scalar>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let one = ax.is_one();
                best = Some((i, j, ax));
                if one {
                    break;
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn diagonalize<T: Scalar>(
    a: &mut Matrix<T>,
    mut u: Option<&mut Matrix<T>>,
    mut v: Option<&mut Matrix<T>>,
) {
    let (rows, cols) = (a.rows(), a.cols());
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_in_block(a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(t, pi);
        }
        a.swap_cols(t, pj);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_deref_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                dirty |= !a[(t, j)].is_zero();
            }

            if dirty {
                // Move the smallest leftover of row/column t into the pivot.
                let mut best = (t, t, a[(t, t)].abs());
                for i in t + 1..rows {
                    let x = a[(i, t)].abs();
                    if !x.is_zero() && x < best.2 {
                        best = (i, t, x);
                    }
                }
                for j in t + 1..cols {
                    let x = a[(t, j)].abs();
                    if !x.is_zero() && x < best.2 {
                        best = (t, j, x);
                    }
                }
                let (bi, bj, _) = best;
                a.swap_rows(t, bi);
                if let Some(u) = u.as_deref_mut() {
                    u.swap_rows(t, bi);
                }
                a.swap_cols(t, bj);
                if let Some(v) = v.as_deref_mut() {
                    v.swap_cols(t, bj);
                }
                continue;
            }

            // Pivot row and column are clean; enforce the divisor chain.
            let p = a[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = T::one();
                    a.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_deref_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(t);
            }
        }
    }
}

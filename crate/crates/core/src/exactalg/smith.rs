use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Smith normal form `U·A·V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// `rows×rows`, records the row operations.
    pub u: IntegerMatrix,
    /// `rows×cols`, diagonal with `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
    pub d: IntegerMatrix,
    /// `cols×cols`, records the column operations.
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// The diagonal `d₁, …, d_min(rows, cols)`, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal_entries()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d
            .diagonal_entries()
            .iter()
            .take_while(|d| !d.is_zero())
            .count()
    }
}

/// Computes the Smith normal form of `a` together with the transformations.
///
/// Pivoting picks the nonzero entry of least absolute value in the remaining
/// block, ties broken by lowest `(row, col)`. Diagonal signs are folded
/// into `U`.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, k) else {
                return SmithDecomposition { u, d, v };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = d[(k, k)].clone();
            for i in k + 1..rows {
                if !d[(i, k)].is_zero() {
                    let q = -(&d[(i, k)] / &pivot);
                    d.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                }
            }
            for j in k + 1..cols {
                if !d[(k, j)].is_zero() {
                    let q = -(&d[(k, j)] / &pivot);
                    d.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                }
            }

            // Remainders are strictly smaller than the pivot, so the next
            // pass picks one of them and the pivot magnitude decreases.
            let row_col_clear = (k + 1..rows).all(|i| d[(i, k)].is_zero())
                && (k + 1..cols).all(|j| d[(k, j)].is_zero());
            if !row_col_clear {
                continue;
            }

            let offender =
                (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    // Pull the offending row into row k; the next pass
                    // produces a remainder smaller than the pivot.
                    let one = BigInt::from(1);
                    d.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithDecomposition { u, d, v }
}

fn min_pivot(d: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let e = &d[(i, j)];
            if e.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => e.magnitude() < d[(bi, bj)].magnitude(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

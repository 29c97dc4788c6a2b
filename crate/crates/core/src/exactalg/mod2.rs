use num_bigint::BigInt;
use num_integer::Integer;

use super::IntegerMatrix;
use crate::error::{Error, Result};

/// Dense matrix over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl Mod2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    /// `n×1` matrix whose single column is `v`.
    pub fn column(v: &[bool]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            bits: v.to_vec(),
        }
    }

    /// Reduction of an integer matrix mod 2.
    pub fn reduce(a: &IntegerMatrix) -> Self {
        let two = BigInt::from(2);
        Self {
            rows: a.rows(),
            cols: a.cols(),
            bits: a
                .entries()
                .iter()
                .map(|e| !e.is_multiple_of(&two))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.bits[i * self.cols + j] = b;
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(false, |acc, j| acc ^ (self.get(i, j) & x[j])))
            .collect()
    }
}

/// Solves `a·x ≡ b (mod 2)`.
///
/// Gauss-Jordan elimination choosing the lowest-index pivot row in each
/// column; free variables are set to 0, so the answer is deterministic.
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve_mod2(a: &Mod2Matrix, b: &[bool]) -> Result<Option<Vec<bool>>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.len(),
        });
    }
    let (rows, cols) = (a.rows, a.cols);
    // Augmented rows [a | b].
    let mut m: Vec<Vec<bool>> = (0..rows)
        .map(|i| {
            let mut r: Vec<bool> = (0..cols).map(|j| a.get(i, j)).collect();
            r.push(b[i]);
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] {
                let src = m[r].clone();
                for (x, s) in m[i].iter_mut().zip(src) {
                    *x ^= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| row[cols]) {
        return Ok(None);
    }
    let mut x = vec![false; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Ok(Some(x))
}

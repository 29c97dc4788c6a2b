use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Either dimension may be zero; such a matrix stands for the zero map
/// between the corresponding free modules.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count does not match {rows}x{cols}"
        );
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from a slice of equal-length rows.
    ///
    /// Panics on ragged input. The column count of an empty row list is 0.
    pub fn from_rows<T, R>(rows: &[R]) -> Self
    where
        T: Into<BigInt> + Clone,
        R: AsRef<[T]>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Self::from_entries(rows.len(), cols, entries)
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone().into();
        }
        m
    }

    /// `n×1` matrix whose single column is `v`.
    pub fn column(v: &[BigInt]) -> Self {
        Self::from_entries(v.len(), 1, v.to_vec())
    }

    /// `1×n` matrix whose single row is `v`.
    pub fn row(v: &[BigInt]) -> Self {
        Self::from_entries(1, v.len(), v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row_slice(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_vec(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn diagonal_entries(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First `(i, j)` with `i < j` where `self[(i, j)] != self[(j, i)]`.
    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length does not match columns");
        (0..self.rows)
            .map(|i| self.row_slice(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// The determinant of the `0×0` matrix is 1.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    // Exact by Sylvester's identity.
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(if n == 0 { sign } else { sign * prev })
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn unimodular_inverse(&self) -> Result<Self> {
        let det = self.determinant()?;
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodularChange { det });
        }
        // U·A·V = D with D = I, so A⁻¹ = V·U.
        let snf = super::smith_normal_form(self);
        debug_assert_eq!(snf.d, Self::identity(self.rows));
        Ok(&snf.v * &snf.u)
    }

    /// Entry-wise reduction mod `m` into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mod_floor(m)).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor · row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = &self[(src, j)] * factor;
            self[(dst, j)] += delta;
        }
    }

    /// `col[dst] += factor · col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = &self[(i, src)] * factor;
            self[(i, dst)] += delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -v;
        }
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| RowFmt(self.row_slice(i))))
            .finish()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row_slice(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

struct RowFmt<'a>(&'a [BigInt]);

impl fmt::Debug for RowFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

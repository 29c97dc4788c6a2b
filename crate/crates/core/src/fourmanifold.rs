//! Closed 1-connected topological 4-manifolds, as intersection forms.
//!
//! A manifold is represented by the Gram matrix of its intersection form on
//! `H²(M;Z)` in a chosen basis. Connected sum corresponds to the direct sum
//! of forms; [`FourManifold::from_blocks`] lays out the basis in expression
//! order. Whether a given form is realised by a manifold is not checked,
//! and neither is the Kirby–Siebenmann invariant for odd forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{solve_mod2, IntegerMatrix, Mod2Matrix};

/// Standard building blocks for connected sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// `CP²`, form `[1]`.
    Cp2,
    /// `CP²` with reversed orientation, form `[−1]`.
    Cp2Bar,
    /// `S²×S²`, the hyperbolic plane `[[0,1],[1,0]]`.
    S2xS2,
    /// The positive definite even form of rank 8.
    E8,
    /// The negative of [`Block::E8`].
    E8Bar,
    /// The K3 surface, `3H ⊕ 2(−E8)`.
    K3,
}

impl Block {
    pub const ALL: [Block; 6] = [
        Block::Cp2,
        Block::Cp2Bar,
        Block::S2xS2,
        Block::E8,
        Block::E8Bar,
        Block::K3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Block::Cp2 => "CP2",
            Block::Cp2Bar => "-CP2",
            Block::S2xS2 => "S2xS2",
            Block::E8 => "E8",
            Block::E8Bar => "-E8",
            Block::K3 => "K3",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Block::Cp2 | Block::Cp2Bar => 1,
            Block::S2xS2 => 2,
            Block::E8 | Block::E8Bar => 8,
            Block::K3 => 22,
        }
    }

    pub fn gram(self) -> IntegerMatrix {
        match self {
            Block::Cp2 => IntegerMatrix::diagonal(&[1]),
            Block::Cp2Bar => IntegerMatrix::diagonal(&[-1]),
            Block::S2xS2 => hyperbolic(),
            Block::E8 => e8(),
            Block::E8Bar => negate(&e8()),
            Block::K3 => {
                let h = hyperbolic();
                let e = negate(&e8());
                h.direct_sum(&h)
                    .direct_sum(&h)
                    .direct_sum(&e)
                    .direct_sum(&e)
            }
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn hyperbolic() -> IntegerMatrix {
    IntegerMatrix::from_rows(&[[0, 1], [1, 0]])
}

/// Cartan matrix of the E8 Dynkin diagram: a chain 0–1–2–3–4–5–6 with node 7
/// attached to node 4. 2 on the diagonal, −1 for each edge.
fn e8() -> IntegerMatrix {
    const EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    let mut m = IntegerMatrix::diagonal(&[2; 8]);
    for (a, b) in EDGES {
        m[(a, b)] = BigInt::from(-1);
        m[(b, a)] = BigInt::from(-1);
    }
    m
}

fn negate(m: &IntegerMatrix) -> IntegerMatrix {
    IntegerMatrix::from_entries(m.rows(), m.cols(), m.entries().iter().map(|e| -e).collect())
}

/// A class in `H²(M;Z/2)`, as coordinates mod 2 in the manifold's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mod2Class {
    coords: Vec<bool>,
}

impl Mod2Class {
    pub fn new(coords: Vec<bool>) -> Self {
        Self { coords }
    }

    pub fn reduce(v: &[BigInt]) -> Self {
        let two = BigInt::from(2);
        Self::new(v.iter().map(|x| !x.is_multiple_of(&two)).collect())
    }

    pub fn coords(&self) -> &[bool] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&b| !b)
    }

    /// Coordinates as 0/1 integers.
    pub fn lift(&self) -> Vec<BigInt> {
        self.coords
            .iter()
            .map(|&b| BigInt::from(u8::from(b)))
            .collect()
    }
}

impl fmt::Display for Mod2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<&str> = self
            .coords
            .iter()
            .map(|&b| if b { "1" } else { "0" })
            .collect();
        write!(f, "({})", bits.join(","))
    }
}

/// A closed 1-connected 4-manifold given by its intersection form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourManifold {
    gram: IntegerMatrix,
    label: String,
}

impl FourManifold {
    /// Validates that `gram` is square, symmetric, unimodular and nonempty.
    pub fn new(gram: IntegerMatrix, label: impl Into<String>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if gram.rows() == 0 {
            return Err(Error::EmptyForm);
        }
        if let Some((row, col)) = gram.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        let det = gram.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(Self {
            gram,
            label: label.into(),
        })
    }

    /// Connected sum of blocks, `multiplicity` copies each, in order.
    pub fn from_blocks(expression: &[(Block, usize)]) -> Result<Self> {
        let mut gram = IntegerMatrix::zeros(0, 0);
        let mut terms = Vec::new();
        for &(block, count) in expression {
            let g = block.gram();
            for _ in 0..count {
                gram = gram.direct_sum(&g);
            }
            match count {
                0 => {}
                1 => terms.push(block.name().to_string()),
                n => terms.push(format!("{n}*{}", block.name())),
            }
        }
        Self::new(gram, terms.join(" # "))
    }

    pub fn block(block: Block) -> Self {
        Self::from_blocks(&[(block, 1)]).expect("standard blocks are unimodular")
    }

    pub fn gram(&self) -> &IntegerMatrix {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Rank of `H²(M;Z)`.
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// `(b⁺, b⁻)`: positive and negative inertia indices of the form.
    pub fn inertia(&self) -> (usize, usize) {
        let diag = congruence_diagonal(&self.gram);
        let pos = diag.iter().filter(|d| d.is_positive()).count();
        let neg = diag.iter().filter(|d| d.is_negative()).count();
        (pos, neg)
    }

    pub fn signature(&self) -> i64 {
        let (pos, neg) = self.inertia();
        pos as i64 - neg as i64
    }

    /// True iff every diagonal entry of the form is even.
    pub fn is_even(&self) -> bool {
        let two = BigInt::from(2);
        self.gram
            .diagonal_entries()
            .iter()
            .all(|d| d.is_multiple_of(&two))
    }

    /// The characteristic vector mod 2: the unique `w` with
    /// `Q·w ≡ diag(Q) (mod 2)`, equivalently `xᵀQx ≡ xᵀQw` for all `x`.
    /// It represents `w₂(M)`.
    pub fn wu_class(&self) -> Mod2Class {
        let q = Mod2Matrix::reduce(&self.gram);
        let two = BigInt::from(2);
        let rhs: Vec<bool> = self
            .gram
            .diagonal_entries()
            .iter()
            .map(|d| !d.is_multiple_of(&two))
            .collect();
        let w = solve_mod2(&q, &rhs)
            .expect("square system")
            .expect("unimodular form is invertible mod 2");
        Mod2Class::new(w)
    }

    /// The same manifold in the basis given by the columns of `p`:
    /// the form becomes `pᵀ·Q·p`.
    pub fn change_basis(&self, p: &IntegerMatrix) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        if p.rows() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: p.rows(),
            });
        }
        let det = p.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodularChange { det });
        }
        let gram = &(&p.transpose() * &self.gram) * p;
        Ok(Self {
            gram,
            label: self.label.clone(),
        })
    }
}

impl fmt::Display for FourManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Diagonal of a rational matrix congruent to the symmetric matrix `q`.
#[allow(clippy::needless_range_loop)]
fn congruence_diagonal(q: &IntegerMatrix) -> Vec<BigRational> {
    let n = q.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            q.row_slice(i)
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect()
        })
        .collect();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // x_k ← x_k + x_j makes the (k,k) entry 2·a_kj ≠ 0.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            // Row k is zero in the remaining block.
            diag.push(pivot);
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in k..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        diag.push(pivot);
    }
    diag
}

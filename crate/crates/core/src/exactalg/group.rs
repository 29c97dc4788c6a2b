use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, IntegerMatrix};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t₁ ⊕ … ⊕ Z/tₖ`
/// in invariant-factor form: `2 ≤ t₁ | t₂ | … | tₖ`.
///
/// Two values compare equal exactly when the groups are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_diagonal(0, [order.into()])
    }

    /// Group `Z^free_rank ⊕ (⊕ Z/dᵢ)` for arbitrary `dᵢ`, normalised.
    ///
    /// Entries equal to 0 contribute a free summand; units contribute nothing.
    pub fn from_diagonal(free_rank: usize, diag: impl IntoIterator<Item = BigInt>) -> Self {
        let diag: Vec<BigInt> = diag.into_iter().map(|d| d.abs()).collect();
        let zeros = diag.iter().filter(|d| d.is_zero()).count();
        let entries: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
        // A diagonal matrix is already a presentation; its Smith form is the
        // invariant factor chain.
        let snf = smith_normal_form(&IntegerMatrix::diagonal(&entries));
        let torsion = snf
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        Self {
            free_rank: free_rank + zeros,
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, or `None` if it is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn torsion_subgroup(&self) -> Self {
        Self {
            free_rank: 0,
            torsion: self.torsion.clone(),
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Greatest common divisor of the entries; 0 for the empty or zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `Z^rows / column-span(a)`.
pub fn cokernel(a: &IntegerMatrix) -> FgAbelianGroup {
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    let rank = snf.rank();
    FgAbelianGroup::from_diagonal(a.rows() - rank, factors.into_iter().take(rank))
}

/// Basis of the lattice `{x ∈ Z^cols : a·x = 0}`, one vector per column.
///
/// The result has `cols` rows and `cols − rank(a)` columns.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    // A·V = U⁻¹·D, and the columns of D past the rank are zero.
    let n = a.cols();
    let mut basis = IntegerMatrix::zeros(n, n - rank);
    for (out_col, j) in (rank..n).enumerate() {
        for i in 0..n {
            basis[(i, out_col)] = snf.v[(i, j)].clone();
        }
    }
    basis
}

/// Rank of `a` over the rationals.
pub fn rank(a: &IntegerMatrix) -> usize {
    smith_normal_form(a).rank()
}

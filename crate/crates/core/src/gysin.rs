//! Invariants of the total space `M(α)` of a circle bundle over `M`.
//!
//! Since `H^odd(M) = 0` and `H^k(M) = 0` for `k ≥ 5`, the Gysin sequence
//!
//! ```text
//! … → H^k(M) --∪α--> H^{k+2}(M) --p*--> H^{k+2}(M(α)) → H^{k+1}(M) → …
//! ```
//!
//! splits into short pieces:
//!
//! | degree | value                                   |
//! |--------|-----------------------------------------|
//! | H⁰     | `Z`                                     |
//! | H¹     | `ker(H⁰(M) → H²(M), 1 ↦ α)`             |
//! | H²     | `coker(H⁰(M) → H²(M), 1 ↦ α)`           |
//! | H³     | `ker(∪α : H²(M) → H⁴(M) = Z)`           |
//! | H⁴     | `coker(∪α : H²(M) → H⁴(M))`             |
//! | H⁵     | `H⁴(M) = Z`                             |
//!
//! For primitive `α` this gives `H⁴ = 0`, `H⁵ = Z` and `H² ≅ H³ ≅ Z^{r−1}`;
//! by Poincaré duality `H₂(M(α)) ≅ H³(M(α))` and `H₁ ≅ H⁴`. Non-primitive
//! and zero classes are handled by the same bookkeeping (an extension of the
//! primitive case): divisibility `d > 1` yields `Z/d` torsion in `H²` and
//! `H⁴`, and `α = 0` yields the Künneth profile of `M × S¹`.
//!
//! `π₁(M(α))` is cyclic. From the homotopy sequence of the fibration the
//! image of `π₂(M) = H₂(M) → π₁(S¹) = Z` is `d·Z`, so `π₁ = Z/d`, infinite
//! cyclic when `α = 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    cokernel, content, kernel_basis, solve_mod2, FgAbelianGroup, IntegerMatrix, Mod2Matrix,
};
use crate::fourmanifold::{FourManifold, Mod2Class};

/// Euler class of an oriented circle bundle, in the manifold's basis of `H²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerClass {
    coords: Vec<BigInt>,
}

impl EulerClass {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| c.into()).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![BigInt::zero(); rank])
    }

    /// The `i`th basis vector of `Z^rank`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); rank];
        coords[i] = BigInt::one();
        Self::new(coords)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn reduce_mod2(&self) -> Mod2Class {
        Mod2Class::reduce(&self.coords)
    }

    /// Coordinates of the same class after [`FourManifold::change_basis`]
    /// with `p`, given `p_inverse = p⁻¹`.
    pub fn in_basis(&self, p_inverse: &IntegerMatrix) -> Self {
        Self::new(p_inverse.mul_vec(&self.coords))
    }
}

impl From<Vec<BigInt>> for EulerClass {
    fn from(coords: Vec<BigInt>) -> Self {
        Self::new(coords)
    }
}

/// Integral cohomology of `M(α)` and the order of its fundamental group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyProfile {
    /// `H⁰ … H⁵`.
    pub h: [FgAbelianGroup; 6],
    /// Order of the cyclic group `π₁`; 0 means infinite cyclic.
    pub pi1_order: BigInt,
}

impl CohomologyProfile {
    /// `Σ (−1)^k rank H^k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let r = g.free_rank() as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    pub fn is_simply_connected(&self) -> bool {
        self.pi1_order.is_one()
    }

    /// `π₂(M(α))`: the kernel of `π₂(M) ≅ Z^r → π₁(S¹) = Z`, which is
    /// evaluation against `α`. Free of rank `r − 1`, or `r` when `α = 0`.
    pub fn pi2(&self) -> FgAbelianGroup {
        FgAbelianGroup::free(self.h[3].free_rank())
    }
}

fn check_len(m: &FourManifold, alpha: &EulerClass) -> Result<()> {
    if alpha.len() != m.rank() {
        return Err(Error::DimensionMismatch {
            expected: m.rank(),
            found: alpha.len(),
        });
    }
    Ok(())
}

/// The `1×r` matrix of `∪α : H²(M) → H⁴(M) = Z`, `x ↦ xᵀ·Q·α`.
pub fn cup_alpha_matrix(m: &FourManifold, alpha: &EulerClass) -> Result<IntegerMatrix> {
    check_len(m, alpha)?;
    // Q is symmetric, so the row is (Q·α)ᵀ.
    Ok(IntegerMatrix::row(&m.gram().mul_vec(alpha.coords())))
}

/// Divisibility of `α`: the gcd of its coordinates. 1 iff `α` is primitive,
/// 0 iff `α = 0`.
pub fn divisibility(m: &FourManifold, alpha: &EulerClass) -> Result<BigInt> {
    check_len(m, alpha)?;
    Ok(content(alpha.coords()))
}

/// The cohomology profile of `M(α)` from the Gysin sequence.
pub fn cohomology(m: &FourManifold, alpha: &EulerClass) -> Result<CohomologyProfile> {
    check_len(m, alpha)?;
    // H⁰(M) → H²(M), 1 ↦ α.
    let euler_map = IntegerMatrix::column(alpha.coords());
    let cup = cup_alpha_matrix(m, alpha)?;

    let h1 = FgAbelianGroup::free(kernel_basis(&euler_map).cols());
    let h2 = cokernel(&euler_map);
    let h3 = FgAbelianGroup::free(kernel_basis(&cup).cols());
    let h4 = cokernel(&cup);

    Ok(CohomologyProfile {
        h: [
            FgAbelianGroup::free(1),
            h1,
            h2,
            h3,
            h4,
            FgAbelianGroup::free(1),
        ],
        pi1_order: content(alpha.coords()),
    })
}

/// Whether `w₂(M(α)) = 0`.
///
/// `w₂(M(α)) = p*(w₂(M))`, and by the mod-2 Gysin sequence
/// `H⁰(M;Z/2) --∪α--> H²(M;Z/2) --p*--> H²(M(α);Z/2)` the kernel of `p*` is
/// the span of `α mod 2`. So `M(α)` is spin iff `w₂(M)` lies in that span.
pub fn is_total_space_spin(m: &FourManifold, alpha: &EulerClass) -> Result<bool> {
    check_len(m, alpha)?;
    let w2 = m.wu_class();
    let image = Mod2Matrix::column(alpha.reduce_mod2().coords());
    Ok(solve_mod2(&image, w2.coords())?.is_some())
}

//! Homeomorphism type of `M(α)` for primitive Euler classes.
//!
//! For primitive `α` the total space is a closed 1-connected 5-manifold with
//! `H₂ ≅ Z^{r−1}` torsion-free, so the Smale–Barden classification leaves two
//! possibilities, told apart by `w₂(M(α))`:
//!
//! * `#_{r−1} S²×S³` when `w₂(M) = 0` or `w₂(M) ≡ α (mod 2)`;
//! * `B #_{r−2} S²×S³` otherwise.
//!
//! `B` is the double of the disk bundle of `λ_R ⊕ ε` over `S²` (`λ` the Hopf
//! line bundle); it is only used as a label here. The empty connected sum is
//! `S⁵`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::content;
use crate::fourmanifold::FourManifold;
use crate::gysin::{divisibility, EulerClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiveManifoldKind {
    /// `#_k S²×S³`; `S⁵` for `k = 0`.
    ConnSum,
    /// `B #_k S²×S³`.
    BConnSum,
}

impl FiveManifoldKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FiveManifoldKind::ConnSum => "CONN_SUM",
            FiveManifoldKind::BConnSum => "B_CONN_SUM",
        }
    }
}

/// A closed 1-connected 5-manifold of the form `#_k S²×S³` or `B #_k S²×S³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiveManifoldType {
    pub kind: FiveManifoldKind,
    pub s2xs3_count: usize,
}

impl FiveManifoldType {
    pub fn conn_sum(count: usize) -> Self {
        Self {
            kind: FiveManifoldKind::ConnSum,
            s2xs3_count: count,
        }
    }

    pub fn b_conn_sum(count: usize) -> Self {
        Self {
            kind: FiveManifoldKind::BConnSum,
            s2xs3_count: count,
        }
    }

    pub fn is_spin(&self) -> bool {
        self.kind == FiveManifoldKind::ConnSum
    }

    /// Rank of `H₂`.
    pub fn h2_rank(&self) -> usize {
        match self.kind {
            FiveManifoldKind::ConnSum => self.s2xs3_count,
            FiveManifoldKind::BConnSum => self.s2xs3_count + 1,
        }
    }
}

impl fmt::Display for FiveManifoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.s2xs3_count) {
            (FiveManifoldKind::ConnSum, 0) => f.write_str("S^5"),
            (FiveManifoldKind::ConnSum, 1) => f.write_str("S^2 x S^3"),
            (FiveManifoldKind::ConnSum, k) => write!(f, "#_{k} S^2 x S^3"),
            (FiveManifoldKind::BConnSum, 0) => f.write_str("B"),
            (FiveManifoldKind::BConnSum, 1) => f.write_str("B # S^2 x S^3"),
            (FiveManifoldKind::BConnSum, k) => write!(f, "B #_{k} S^2 x S^3"),
        }
    }
}

/// Homeomorphism type of `M(α)` for primitive `α`.
///
/// Non-primitive classes are rejected with [`Error::NonPrimitive`]; their
/// total spaces are not simply connected. The cohomology is still available
/// from [`crate::gysin::cohomology`].
pub fn classify(m: &FourManifold, alpha: &EulerClass) -> Result<FiveManifoldType> {
    let d = divisibility(m, alpha)?;
    if !d.is_one() {
        return Err(Error::NonPrimitive { divisibility: d });
    }
    let r = m.rank();
    let w2 = m.wu_class();
    if !w2.is_zero() && w2 != alpha.reduce_mod2() {
        // w2 ≠ 0 needs an odd form, and a rank-1 unimodular form is [±1]
        // whose only primitive classes reduce to w2, so r ≥ 2 here.
        Ok(FiveManifoldType::b_conn_sum(r - 2))
    } else {
        Ok(FiveManifoldType::conn_sum(r - 1))
    }
}

/// A primitive `α` with `M(α) = #_{r−1} S²×S³`.
///
/// For odd forms this is the 0/1 lift of `w₂(M)`, which is primitive since a
/// nonzero 0/1 vector has content 1. For even forms `w₂ = 0` and no primitive
/// class reduces to 0 mod 2, but every primitive class gives a spin total
/// space; the first basis vector is returned.
pub fn find_spin_euler_class(m: &FourManifold) -> EulerClass {
    let lift = m.wu_class().lift();
    let alpha = if content(&lift).is_one() {
        EulerClass::new(lift)
    } else {
        EulerClass::unit(m.rank(), 0)
    };
    debug_assert!(content(alpha.coords()).is_one());
    alpha
}

/// Every primitive `α ∈ Z^rank` with `‖α‖∞ ≤ bound`, in lexicographic order.
///
/// The iterator is `Clone`, so an enumeration can be restarted or split.
#[derive(Clone, Debug)]
pub struct PrimitiveClasses {
    bound: i64,
    next: Option<Vec<i64>>,
}

impl PrimitiveClasses {
    pub fn new(rank: usize, bound: u32) -> Self {
        let bound = i64::from(bound);
        let next = (rank > 0 && bound > 0).then(|| vec![-bound; rank]);
        Self { bound, next }
    }

    /// Odometer step; false once `v` wraps past the last vector.
    fn advance(&self, v: &mut [i64]) -> bool {
        for i in (0..v.len()).rev() {
            if v[i] < self.bound {
                v[i] += 1;
                return true;
            }
            v[i] = -self.bound;
        }
        false
    }
}

impl Iterator for PrimitiveClasses {
    type Item = EulerClass;

    fn next(&mut self) -> Option<EulerClass> {
        loop {
            let current = self.next.take()?;
            let mut succ = current.clone();
            if self.advance(&mut succ) {
                self.next = Some(succ);
            }
            let coords: Vec<BigInt> = current.iter().map(|&c| c.into()).collect();
            if content(&coords).is_one() {
                return Some(EulerClass::new(coords));
            }
        }
    }
}

/// Primitive Euler classes on `m` with coordinates bounded by `bound`.
pub fn enumerate_primitive(m: &FourManifold, bound: u32) -> PrimitiveClasses {
    PrimitiveClasses::new(m.rank(), bound)
}

/// Total space of the circle bundle over `S²` with Euler number `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThreeManifold {
    /// `S²×S¹`, for `p = 0`.
    S2xS1,
    /// `S³`, for `p = ±1`.
    S3,
    /// The lens space `L(p, 1)`, `p ≥ 2`.
    Lens(u64),
}

impl fmt::Display for ThreeManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThreeManifold::S2xS1 => f.write_str("S^2 x S^1"),
            ThreeManifold::S3 => f.write_str("S^3"),
            ThreeManifold::Lens(p) => write!(f, "L({p},1)"),
        }
    }
}

pub fn s2_bundle(p: i64) -> ThreeManifold {
    match p.unsigned_abs() {
        0 => ThreeManifold::S2xS1,
        1 => ThreeManifold::S3,
        q => ThreeManifold::Lens(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourmanifold::Block;

    fn cp2_cp2bar() -> FourManifold {
        FourManifold::from_blocks(&[(Block::Cp2, 1), (Block::Cp2Bar, 1)]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let s = FourManifold::block(Block::S2xS2);
        let t = classify(&s, &EulerClass::from_i64(&[1, 0])).unwrap();
        assert_eq!(t, FiveManifoldType::conn_sum(1));
        assert_eq!(t.to_string(), "S^2 x S^3");

        let cp2 = FourManifold::block(Block::Cp2);
        let t = classify(&cp2, &EulerClass::from_i64(&[1])).unwrap();
        assert_eq!(t, FiveManifoldType::conn_sum(0));
        assert_eq!(t.to_string(), "S^5");

        let t = classify(&cp2_cp2bar(), &EulerClass::from_i64(&[1, 0])).unwrap();
        assert_eq!(t, FiveManifoldType::b_conn_sum(0));
        assert_eq!(t.to_string(), "B");
    }

    #[test]
    fn non_primitive_rejected() {
        let s = FourManifold::block(Block::S2xS2);
        assert_eq!(
            classify(&s, &EulerClass::from_i64(&[2, 4])),
            Err(Error::NonPrimitive {
                divisibility: 2.into()
            })
        );
        assert_eq!(
            classify(&s, &EulerClass::zero(2)),
            Err(Error::NonPrimitive {
                divisibility: 0.into()
            })
        );
        assert!(matches!(
            classify(&s, &EulerClass::from_i64(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(FiveManifoldType::conn_sum(21).to_string(), "#_21 S^2 x S^3");
        assert_eq!(FiveManifoldType::b_conn_sum(1).to_string(), "B # S^2 x S^3");
        assert_eq!(
            FiveManifoldType::b_conn_sum(3).to_string(),
            "B #_3 S^2 x S^3"
        );
        assert_eq!(FiveManifoldType::b_conn_sum(3).h2_rank(), 4);
    }

    #[test]
    fn spin_class_examples() {
        let s = FourManifold::block(Block::S2xS2);
        assert_eq!(find_spin_euler_class(&s), EulerClass::from_i64(&[1, 0]));
        let cp2 = FourManifold::block(Block::Cp2);
        assert_eq!(find_spin_euler_class(&cp2), EulerClass::from_i64(&[1]));
        assert_eq!(
            find_spin_euler_class(&cp2_cp2bar()),
            EulerClass::from_i64(&[1, 1])
        );
    }

    fn brute_force_primitive(rank: usize, bound: i64) -> Vec<Vec<i64>> {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let side = (2 * bound + 1) as usize;
        let mut out = Vec::new();
        for idx in 0..side.pow(rank as u32) {
            let mut v = vec![0; rank];
            let mut rest = idx;
            for i in (0..rank).rev() {
                v[i] = (rest % side) as i64 - bound;
                rest /= side;
            }
            if v.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
                out.push(v);
            }
        }
        out
    }

    fn enumerate_i64(rank: usize, bound: u32) -> Vec<Vec<i64>> {
        PrimitiveClasses::new(rank, bound)
            .map(|a| {
                a.coords()
                    .iter()
                    .map(|c| i64::try_from(c).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn primitive_enumeration() {
        assert_eq!(enumerate_i64(1, 1), vec![vec![-1], vec![1]]);
        assert_eq!(enumerate_i64(2, 1).len(), 8);
        assert_eq!(enumerate_i64(2, 2).len(), 16);
        for (rank, bound) in [(1, 5), (2, 3), (3, 2), (4, 1)] {
            assert_eq!(
                enumerate_i64(rank, bound),
                brute_force_primitive(rank, i64::from(bound))
            );
        }
        assert_eq!(PrimitiveClasses::new(0, 3).count(), 0);
    }

    #[test]
    fn s2_bundles() {
        assert_eq!(s2_bundle(0), ThreeManifold::S2xS1);
        assert_eq!(s2_bundle(-1), ThreeManifold::S3);
        assert_eq!(s2_bundle(5).to_string(), "L(5,1)");
        assert_eq!(s2_bundle(-7), ThreeManifold::Lens(7));
    }
}

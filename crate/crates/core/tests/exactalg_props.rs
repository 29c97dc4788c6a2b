mod common;

use circle_bundles::exactalg::rank;
use circle_bundles::{cokernel, content, kernel_basis, smith_normal_form, IntegerMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;

fn matrix(max_dim: usize) -> impl Strategy<Value = IntegerMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
            IntegerMatrix::from_entries(r, c, v.into_iter().map(BigInt::from).collect())
        })
    })
}

fn square(max_dim: usize) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-9i64..=9, n * n).prop_map(move |v| {
            IntegerMatrix::from_entries(n, n, v.into_iter().map(BigInt::from).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn smith_decomposition_is_valid(a in matrix(6)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        prop_assert!(s.d.is_diagonal());
        let diag = s.invariant_factors();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            // 0 is divisible by everything, and nothing nonzero follows a 0.
            prop_assert!(w[1].is_multiple_of(&w[0]) || (w[0].is_zero() && w[1].is_zero()));
        }
    }

    #[test]
    fn smith_matches_minor_oracle(a in matrix(4)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.invariant_factors(), common::minor_gcd_invariants(&a));
    }

    #[test]
    fn cokernel_order_is_abs_det(a in square(5)) {
        let det = a.determinant().unwrap();
        prop_assume!(!det.is_zero());
        let g = cokernel(&a);
        prop_assert_eq!(g.order(), Some(det.abs()));
    }

    #[test]
    fn kernel_rank_nullity(a in matrix(6)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.rows(), a.cols());
        prop_assert_eq!(k.cols() + rank(&a), a.cols());
        prop_assert!((&a * &k).is_zero());
        // A lattice basis of a saturated sublattice: Z^n / span is free.
        prop_assert!(cokernel(&k).is_free());
    }

    #[test]
    fn content_invariant_under_unimodular_change(
        v in prop::collection::vec(-20i64..=20, 1..=6),
        seed in any::<u64>(),
    ) {
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        let mut rng = rand_chacha_like(seed);
        let (p, _) = common::random_unimodular(&mut rng, v.len(), 12);
        prop_assert_eq!(content(&p.mul_vec(&v)), content(&v));
    }
}

fn rand_chacha_like(seed: u64) -> rand::rngs::StdRng {
    rand::rngs::StdRng::seed_from_u64(seed)
}

#[test]
fn two_by_two_against_oracle() {
    let a = IntegerMatrix::from_rows(&[[2, 4], [6, 8]]);
    let oracle = common::minor_gcd_invariants(&a);
    assert_eq!(oracle, vec![BigInt::from(2), BigInt::from(4)]);
    assert_eq!(smith_normal_form(&a).invariant_factors(), oracle);
    assert_eq!(cokernel(&a).order(), Some(BigInt::from(8)));
}

#[test]
fn random_unimodular_helper_is_consistent() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for n in 0..6 {
        let (p, inv) = common::random_unimodular(&mut rng, n, 30);
        assert_eq!(&p * &inv, IntegerMatrix::identity(n));
        assert_eq!(p.unimodular_inverse().unwrap(), inv);
    }
}

#[test]
fn large_entries_stay_exact() {
    // Entries far beyond 64 bits.
    let big = BigInt::from(10).pow(40u32);
    let a = IntegerMatrix::from_entries(
        2,
        2,
        vec![
            big.clone() * 6,
            big.clone() * 4,
            big.clone() * 4,
            big.clone() * 2,
        ],
    );
    let s = smith_normal_form(&a);
    assert_eq!(&(&s.u * &a) * &s.v, s.d);
    assert_eq!(
        s.invariant_factors(),
        vec![big.clone() * 2, big.clone() * 2]
    );
}

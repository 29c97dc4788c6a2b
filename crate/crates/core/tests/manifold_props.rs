mod common;

use circle_bundles::{Block, FourManifold};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;

fn block() -> impl Strategy<Value = Block> {
    prop::sample::select(vec![
        Block::Cp2,
        Block::Cp2Bar,
        Block::S2xS2,
        Block::E8,
        Block::E8Bar,
    ])
}

fn expression() -> impl Strategy<Value = Vec<(Block, usize)>> {
    prop::collection::vec((block(), 1usize..=2), 1..=3)
}

fn form_value(m: &FourManifold, x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.iter().zip(m.gram().mul_vec(y)).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_and_signature_are_additive(a in expression(), b in expression()) {
        let ma = FourManifold::from_blocks(&a).unwrap();
        let mb = FourManifold::from_blocks(&b).unwrap();
        let ab: Vec<_> = a.iter().chain(&b).copied().collect();
        let mab = FourManifold::from_blocks(&ab).unwrap();
        prop_assert_eq!(mab.rank(), ma.rank() + mb.rank());
        prop_assert_eq!(mab.signature(), ma.signature() + mb.signature());
    }

    #[test]
    fn even_forms_have_signature_divisible_by_8(e in expression()) {
        let m = FourManifold::from_blocks(&e).unwrap();
        if m.is_even() {
            prop_assert_eq!(m.signature().rem_euclid(8), 0);
        }
        prop_assert_eq!(m.is_even(), m.wu_class().is_zero());
    }

    #[test]
    fn invariants_survive_basis_change(e in expression(), seed in any::<u64>()) {
        let m = FourManifold::from_blocks(&e).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let (p, inv) = common::random_unimodular(&mut rng, m.rank(), 3 * m.rank());
        let n = m.change_basis(&p).unwrap();
        prop_assert!(n.gram().is_symmetric());
        prop_assert!(n.gram().determinant().unwrap().abs() == BigInt::from(1));
        prop_assert_eq!(n.rank(), m.rank());
        prop_assert_eq!(n.signature(), m.signature());
        prop_assert_eq!(n.is_even(), m.is_even());
        // w' ≡ P⁻¹·w (mod 2)
        let w = m.wu_class().lift();
        let expected: Vec<bool> = inv
            .mul_vec(&w)
            .iter()
            .map(|x| x.is_odd())
            .collect();
        let got = n.wu_class();
        prop_assert_eq!(got.coords(), &expected[..]);
    }
}

#[test]
fn wu_class_is_characteristic_exhaustively() {
    for m in common::block_manifolds(10) {
        let r = m.rank();
        let w = m.wu_class().lift();
        for bits in 0u32..1 << r {
            let x: Vec<BigInt> = (0..r).map(|i| BigInt::from((bits >> i) & 1)).collect();
            let lhs = form_value(&m, &x, &x);
            let rhs = form_value(&m, &x, &w);
            assert!((lhs - rhs).is_even(), "{} fails at x = {bits:b}", m.label());
        }
    }
}

#[test]
fn k3_from_blocks_matches_direct_sum() {
    let k3 = FourManifold::block(Block::K3);
    let sum = FourManifold::from_blocks(&[(Block::S2xS2, 3), (Block::E8Bar, 2)]).unwrap();
    assert_eq!(k3.gram(), sum.gram());
    assert_eq!(sum.label(), "3*S2xS2 # 2*-E8");
    assert_eq!(k3.signature(), -16);
}

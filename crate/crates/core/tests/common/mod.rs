#![allow(dead_code)]

use circle_bundles::{Block, FourManifold, IntegerMatrix};
use num_bigint::BigInt;
use rand::Rng;

/// Random unimodular `P` together with `P⁻¹`, built from elementary
/// operations so the inverse is known without any solver.
pub fn random_unimodular<R: Rng>(
    rng: &mut R,
    n: usize,
    steps: usize,
) -> (IntegerMatrix, IntegerMatrix) {
    let mut p = IntegerMatrix::identity(n);
    let mut inv = IntegerMatrix::identity(n);
    if n == 0 {
        return (p, inv);
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let (i, j) = distinct_pair(rng, n);
                let f = BigInt::from(rng.gen_range(-2i64..=2));
                // P ← P·E where E = I + f·e_i e_jᵀ (col_j += f·col_i);
                // P⁻¹ ← E⁻¹·P⁻¹ (row_i −= f·row_j).
                p.add_col_multiple(j, i, &f);
                inv.add_row_multiple(i, j, &-f);
            }
            1 if n > 1 => {
                let (i, j) = distinct_pair(rng, n);
                p.swap_cols(i, j);
                inv.swap_rows(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                p.negate_col(i);
                inv.negate_row(i);
            }
        }
    }
    (p, inv)
}

fn distinct_pair<R: Rng>(rng: &mut R, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, lim: i64) -> IntegerMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-lim..=lim)))
        .collect();
    IntegerMatrix::from_entries(rows, cols, entries)
}

/// Every connected sum of standard blocks (K3 excluded) with rank in `1..=max_rank`.
pub fn block_manifolds(max_rank: usize) -> Vec<FourManifold> {
    let blocks = [
        Block::Cp2,
        Block::Cp2Bar,
        Block::S2xS2,
        Block::E8,
        Block::E8Bar,
    ];
    let mut out = Vec::new();
    let mut counts = vec![0usize; blocks.len()];
    loop {
        let rank: usize = counts.iter().zip(&blocks).map(|(c, b)| c * b.rank()).sum();
        if (1..=max_rank).contains(&rank) {
            let expr: Vec<(Block, usize)> =
                blocks.iter().copied().zip(counts.iter().copied()).collect();
            out.push(FourManifold::from_blocks(&expr).unwrap());
        }
        // Odometer over multiplicities, pruned by rank.
        let mut i = 0;
        loop {
            if i == blocks.len() {
                return out;
            }
            counts[i] += 1;
            let rank: usize = counts.iter().zip(&blocks).map(|(c, b)| c * b.rank()).sum();
            if rank <= max_rank {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Leibniz determinant, for the brute-force oracle only.
fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<BigInt>], total: &mut BigInt) {
    if k == perm.len() {
        let mut inversions = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = BigInt::from(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &p) in perm.iter().enumerate() {
            prod *= &m[i][p];
        }
        *total += prod;
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors `d_k = g_k / g_{k−1}`, `g_k` the gcd of all `k×k`
/// minors, by enumerating every minor.
pub fn minor_gcd_invariants(a: &IntegerMatrix) -> Vec<BigInt> {
    use num_integer::Integer;
    use num_traits::Zero;
    let kmax = a.rows().min(a.cols());
    let mut out = Vec::with_capacity(kmax);
    let mut prev = BigInt::from(1);
    for k in 1..=kmax {
        let mut g = BigInt::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&leibniz(&sub));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat_n(BigInt::zero(), kmax - k + 1));
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

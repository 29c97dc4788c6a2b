use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

use circle_bundles::{
    classify, cohomology, enumerate_primitive, smith_normal_form, Block, EulerClass, FourManifold,
    IntegerMatrix,
};

fn dense_matrix(n: usize) -> IntegerMatrix {
    // Deterministic, moderately sized entries.
    let entries = (0..n * n)
        .map(|k| BigInt::from(((k * 7919 + 13) % 19) as i64 - 9))
        .collect();
    IntegerMatrix::from_entries(n, n, entries)
}

fn bench_smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [4, 8, 16, 22] {
        let a = dense_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| smith_normal_form(black_box(a)))
        });
    }
    group.finish();
}

fn bench_invariants(c: &mut Criterion) {
    let k3 = FourManifold::block(Block::K3);
    let alpha = EulerClass::new((1..=22).map(BigInt::from).collect());
    c.bench_function("k3_signature", |b| b.iter(|| black_box(&k3).signature()));
    c.bench_function("k3_wu_class", |b| b.iter(|| black_box(&k3).wu_class()));
    c.bench_function("k3_cohomology", |b| {
        b.iter(|| cohomology(black_box(&k3), black_box(&alpha)).unwrap())
    });
}

fn bench_survey(c: &mut Criterion) {
    let m = FourManifold::from_blocks(&[(Block::Cp2, 2), (Block::Cp2Bar, 1)]).unwrap();
    c.bench_function("survey_rank3_bound3", |b| {
        b.iter(|| {
            enumerate_primitive(&m, 3)
                .map(|a| classify(&m, &a).unwrap())
                .filter(|t| t.is_spin())
                .count()
        })
    });
}

criterion_group!(benches, bench_smith, bench_invariants, bench_survey);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use extsq_core::algebra::{generic_matrix, nhn_decompose, rat, udl_explicit, udl_oracle, GenMatrix};
use extsq_core::shuffle::{superdiag_sum, superdiag_sum_oracle, UnfoldVars};

fn udl(c: &mut Criterion) {
    let mut group = c.benchmark_group("udl_generic");
    group.sample_size(10);
    for n in [3, 4] {
        let g = generic_matrix(n, &format!("bench{n}g"));
        group.bench_with_input(BenchmarkId::new("explicit", n), &g, |b, g| {
            b.iter(|| udl_explicit(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &g, |b, g| b.iter(|| udl_oracle(black_box(g)).unwrap()));
    }
    group.finish();

    let g = GenMatrix::from_fn(6, 6, |i, j| rat((i * 7 + j * 3) as i64 % 11 - 5, 1 + (i + j) as i64 % 4));
    c.bench_function("nhn_rational_6x6", |b| b.iter(|| nhn_decompose(black_box(&g)).unwrap()));
}

fn superdiagonal(c: &mut Criterion) {
    let v = UnfoldVars::symbolic(3, "bsd3");
    let mut group = c.benchmark_group("superdiagonal_n3");
    group.sample_size(10);
    group.bench_function("closed_form", |b| b.iter(|| superdiag_sum(black_box(&v)).unwrap()));
    group.bench_function("oracle", |b| b.iter(|| superdiag_sum_oracle(black_box(&v)).unwrap()));
    group.finish();
}

criterion_group!(benches, udl, superdiagonal);
criterion_main!(benches);

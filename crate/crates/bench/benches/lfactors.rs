use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use extsq_core::lfactors::EmbeddingParams;
use extsq_core::lfactors::{fe_sweep, holomorphy_check, l_inf, random_repr};
use extsq_core::shuffle::vars::x_indices;
use extsq_core::shuffle::{shuffled_whittaker_closed, shuffled_whittaker_oracle, XVars};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lfactors(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = random_repr(&mut rng, 4, 0);
    let s = Complex64::new(1.3, 2.0);
    c.bench_function("l_inf_eval_n8", |b| b.iter(|| l_inf(black_box(&r)).unwrap().eval(s).unwrap()));
    c.bench_function("fe_sweep_n8", |b| b.iter(|| fe_sweep(black_box(&r), &[Complex64::new(0.37, 1.1)], 1e-8)));
    c.bench_function("holomorphy_check_n8", |b| b.iter(|| holomorphy_check(black_box(&r)).unwrap()));
}

fn whittaker(c: &mut Criterion) {
    let x =
        XVars { n_half: 3, x: x_indices(3).into_iter().enumerate().map(|(k, i)| (i, 0.4 + 0.1 * k as f64)).collect() };
    let ep = EmbeddingParams::zero(6);
    c.bench_function("whittaker_closed_n6", |b| b.iter(|| shuffled_whittaker_closed(black_box(&x), &ep).unwrap()));
    c.bench_function("whittaker_oracle_n6", |b| b.iter(|| shuffled_whittaker_oracle(black_box(&x), &ep).unwrap()));
}

criterion_group!(benches, lfactors, whittaker);
criterion_main!(benches);

//! Random inputs shared by the sweeps.

use std::collections::BTreeMap;

use extsq_core::algebra::{rat, CRat, GenMatrix, Rat};
use extsq_core::lfactors::EmbeddingParams;
use extsq_core::shuffle::vars::{triangle_indices, x_indices};
use extsq_core::shuffle::{UnfoldVars, XVars};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9i64..=9);
    }
    rat(num, rng.gen_range(1i64..=5))
}

pub fn rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> GenMatrix<Rat> {
    let vals: Vec<Rat> = (0..n * n).map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5))).collect();
    GenMatrix::from_fn(n, n, |i, j| vals[i * n + j].clone())
}

pub fn unfold_vars(rng: &mut ChaCha8Rng, n: usize) -> UnfoldVars<Rat> {
    let mut c = BTreeMap::new();
    let mut z = BTreeMap::new();
    for k in triangle_indices(n) {
        c.insert(k, nonzero_rat(rng));
        z.insert(k, nonzero_rat(rng));
    }
    UnfoldVars { n_half: n, c, z }
}

/// Real coordinates bounded away from zero, with random signs.
pub fn x_point(rng: &mut ChaCha8Rng, n: usize) -> XVars<f64> {
    let x = x_indices(n)
        .into_iter()
        .map(|k| {
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            (k, sign * rng.gen_range(0.3..2.0))
        })
        .collect();
    XVars { n_half: n, x }
}

pub fn embedding(rng: &mut ChaCha8Rng, m: usize) -> EmbeddingParams {
    let lambda = (0..m)
        .map(|_| CRat::new(rat(rng.gen_range(-30i64..=30), 100), rat(rng.gen_range(-100i64..=100), 100)))
        .collect();
    let delta = (0..m).map(|_| rng.gen_range(0u8..=1)).collect();
    EmbeddingParams::new(lambda, delta).expect("lengths agree")
}

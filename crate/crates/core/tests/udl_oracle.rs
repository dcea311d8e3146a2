use extsq_core::algebra::{
    corollary_h, corollary_superdiagonal, generic_matrix, nhn_decompose, udl_explicit, udl_oracle, GenMatrix, Rat,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> GenMatrix<Rat> {
    let vals: Vec<Rat> =
        (0..n * n).map(|_| Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())).collect();
    GenMatrix::from_fn(n, n, |i, j| vals[i * n + j].clone())
}

#[test]
fn generic_symbolic_factorizations_agree_up_to_five() {
    for n in 1..=5 {
        let g = generic_matrix(n, &format!("s{n}g"));
        let explicit = udl_explicit(&g).unwrap();
        let derived = explicit.to_nhn().unwrap();
        let oracle = udl_oracle(&g).unwrap().to_nhn().unwrap();
        assert_eq!(derived, oracle, "n = {n}");
        assert_eq!(corollary_h(&g).unwrap(), oracle.h);
        let sup = corollary_superdiagonal(&g).unwrap();
        for i in 0..n.saturating_sub(1) {
            assert_eq!(&sup[i], oracle.n.get(i, i + 1));
        }
        assert_eq!(explicit.reconstruct().unwrap(), g);
    }
}

#[test]
fn random_rational_factorizations_reconstruct() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 50 {
        let n = rng.gen_range(1..=6);
        let g = random_rational_matrix(&mut rng, n);
        let Ok(explicit) = udl_explicit(&g) else { continue };
        assert_eq!(explicit.reconstruct().unwrap(), g);
        let nhn = nhn_decompose(&g).unwrap();
        assert_eq!(nhn.reconstruct().unwrap(), g);
        assert_eq!(explicit.to_nhn().unwrap(), nhn);
        assert_eq!(udl_oracle(&g).unwrap().to_nhn().unwrap(), nhn);
        checked += 1;
    }
}

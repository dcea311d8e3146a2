use std::collections::BTreeMap;

use extsq_core::algebra::{rat, CRat, Rat};
use extsq_core::lfactors::EmbeddingParams;
use extsq_core::shuffle::kappa::{kappa3_closed, parity_constraint_holds};
use extsq_core::shuffle::vars::{triangle_indices, x_indices};
use extsq_core::shuffle::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9i64..=9);
    }
    rat(num, rng.gen_range(1i64..=5))
}

fn random_vars(n: usize, rng: &mut ChaCha8Rng) -> UnfoldVars<Rat> {
    let mut c = BTreeMap::new();
    let mut z = BTreeMap::new();
    for k in triangle_indices(n) {
        c.insert(k, random_rat(rng));
        z.insert(k, random_rat(rng));
    }
    UnfoldVars { n_half: n, c, z }
}

#[test]
fn symbolic_identities_small_n() {
    for n in [2, 3] {
        let v = UnfoldVars::symbolic(n, &format!("si{n}"));
        let b = build_b(&v).unwrap();
        assert!(tilde_relations_hold(&v, &b).unwrap(), "tilde relations n={n}");
        assert_eq!(superdiag_sum_oracle(&v).unwrap(), superdiag_sum(&v).unwrap(), "superdiag n={n}");
        let (l, r) = altsum_check(&v).unwrap();
        assert_eq!(l, r, "altsum n={n}");
    }
}

#[test]
fn recursive_lower_factor_matches_elimination() {
    for n in [2, 3] {
        let x = XVars::symbolic(n, &format!("rl{n}"));
        let rec = lower_factor_recursive(&x).unwrap();
        let oracle = lower_factor_oracle(&x.to_unfold().unwrap()).unwrap();
        assert_eq!(rec, oracle, "n={n}");
        for k in 0..rec.rows() {
            let d = rec.get(k, k);
            let monomial = d.denom().is_constant()
                && d.numer().num_terms() == 1
                && d.numer().terms().all(|(_, c)| c.clone() * c.clone() == rat(1, 1));
            assert!(monomial, "diagonal entry {k} is {d}");
        }
    }
}

#[test]
fn random_rational_identities_n4() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    let mut attempts = 0;
    while done < 20 {
        attempts += 1;
        assert!(attempts < 200, "too many degenerate samples");
        let v = random_vars(4, &mut rng);
        let Ok(b) = build_b(&v) else { continue };
        let Ok(oracle) = superdiag_sum_oracle(&v) else { continue };
        assert!(tilde_relations_hold(&v, &b).unwrap());
        assert_eq!(oracle, superdiag_sum(&v).unwrap());
        let (l, r) = altsum_check(&v).unwrap();
        assert_eq!(l, r);
        done += 1;
    }
}

#[test]
fn x_and_cz_superdiag_forms_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=5 {
        let x = XVars { n_half: n, x: x_indices(n).into_iter().map(|k| (k, random_rat(&mut rng))).collect() };
        let v = x.to_unfold().unwrap();
        assert_eq!(superdiag_sum(&v).unwrap(), superdiag_sum_x(&x));
    }
}

fn random_embedding(m: usize, rng: &mut ChaCha8Rng) -> EmbeddingParams {
    let lambda = (0..m)
        .map(|_| CRat::new(rat(rng.gen_range(-30i64..=30), 100), rat(rng.gen_range(-100i64..=100), 100)))
        .collect();
    let delta = (0..m).map(|_| rng.gen_range(0u8..=1)).collect();
    EmbeddingParams::new(lambda, delta).unwrap()
}

#[test]
fn whittaker_closed_form_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [2, 3] {
        for _ in 0..100 {
            let x = XVars {
                n_half: n,
                x: x_indices(n)
                    .into_iter()
                    .map(|k| {
                        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                        (k, sign * rng.gen_range(0.3..2.0))
                    })
                    .collect(),
            };
            let ep = random_embedding(2 * n, &mut rng);
            let a = shuffled_whittaker_oracle(&x, &ep).unwrap();
            let b = shuffled_whittaker_closed(&x, &ep).unwrap();
            assert!((a - b).norm() <= 1e-10 * b.norm(), "n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn kappa_identity_exhaustive() {
    for n in [2, 3] {
        let mut checked = 0;
        for bits in 0u32..(1 << (2 * n)) {
            let delta: Vec<u8> = (0..2 * n).map(|k| ((bits >> k) & 1) as u8).collect();
            for eps in 0..2u8 {
                for eta in 0..2u8 {
                    if !parity_constraint_holds(n, &delta, eps, eta) {
                        assert!(kappa_signs(n, &delta, eps, eta).is_err());
                        continue;
                    }
                    let k = kappa_signs(n, &delta, eps, eta).unwrap();
                    assert!(k.product_matches(), "n={n} δ={delta:?} ε={eps} η={eta}");
                    assert_eq!(k.kappa3, kappa3_closed(n, &delta, eps, eta));
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 1 << (2 * n + 1));
    }
}

#[test]
fn gamma_table_matches_direct_product() {
    use extsq_core::special::g_delta;
    use num_complex::Complex64;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let ep = random_embedding(2 * n, &mut rng);
        let eta = rng.gen_range(0u8..=1);
        let sum: u32 = ep.delta.iter().map(|&d| d as u32).sum();
        let eps = ((sum + n as u32 * eta as u32) % 2) as u8;
        let table = unfolded_gamma_table(&ep, eps, eta).unwrap();
        assert_eq!(table.sign, kappa_signs(n, &ep.delta, eps, eta).unwrap().kappa);
        let s = Complex64::new(rng.gen_range(0.55..0.95), rng.gen_range(-3.0..3.0));
        let mut direct = Complex64::new(1.0, 0.0);
        for i in 1..=2 * n {
            for j in i + 1..=2 * n {
                if i + j <= 2 * n {
                    let sh = -(ep.lam(i) + ep.lam(j));
                    direct *= g_delta((ep.del(i) + ep.del(j) + eta) % 2, s + sh.to_c64()).unwrap();
                }
            }
        }
        let t = table.eval(s).unwrap();
        assert!((t - direct).norm() <= 1e-12 * direct.norm());
    }
}

use extsq_core::special::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Distance from `s` to the nearest nonpositive integer.
fn pole_gap(s: Complex64) -> f64 {
    if s.re > 0.5 {
        return f64::INFINITY;
    }
    (s - c(s.re.round(), 0.0)).norm()
}

#[test]
fn gamma_c_is_product_of_gamma_r() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut done = 0;
    while done < 200 {
        let s = Complex64::from_polar(rng.gen_range(0.0..30.0), rng.gen_range(0.0..std::f64::consts::TAU));
        if pole_gap(s) < 0.05 || s.im.abs() > 25.0 {
            continue;
        }
        let lhs = gamma_c(s).unwrap();
        let rhs = gamma_r(s).unwrap() * gamma_r(s + 1.0).unwrap();
        assert!(rel(lhs, rhs) < 1e-12, "s = {s}: {lhs} vs {rhs}");
        done += 1;
    }
}

#[test]
fn g_delta_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for delta in 0..2u8 {
        let mut done = 0;
        while done < 100 {
            let s = c(rng.gen_range(-3.0..4.0), rng.gen_range(-8.0..8.0));
            let (Ok(a), Ok(b)) = (g_delta(delta, s), g_delta(delta, 1.0 - s)) else { continue };
            if !(a * b).is_finite() || a.norm() < 1e-8 || b.norm() < 1e-8 {
                continue;
            }
            let want = if delta == 0 { 1.0 } else { -1.0 };
            assert!((a * b - want).norm() < 1e-10, "δ={delta}, s={s}: {}", a * b);
            done += 1;
        }
    }
}

#[test]
fn anchors() {
    assert!((g_delta(0, c(0.5, 0.0)).unwrap() - 1.0).norm() < 1e-12);
    assert!((g_delta(1, c(0.5, 0.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-12);
    let spec = CutoffSpec::default();
    assert!((g_delta_integral(0, c(0.5, 0.0), &spec).unwrap() - 1.0).norm() < 1e-6);
    assert!((g_delta_integral(1, c(0.5, 0.0), &spec).unwrap() - c(0.0, 1.0)).norm() < 1e-6);
    // the Fourier transform of |x|^{s−1}: 2(2π)^{−s}Γ(s)cos(πs/2)
    let s = c(0.3, 0.7);
    let fourier = 2.0 * (-s * (2.0 * PI).ln()).exp() * gamma(s).unwrap() * (PI * s / 2.0).cos();
    assert!(rel(g_delta(0, s).unwrap(), fourier) < 1e-12);
    let odd = c(0.0, 2.0) * (-s * (2.0 * PI).ln()).exp() * gamma(s).unwrap() * (PI * s / 2.0).sin();
    assert!(rel(g_delta(1, s).unwrap(), odd) < 1e-12);
}

#[test]
fn integral_matches_closed_form_on_grid() {
    let spec = CutoffSpec::default();
    for delta in 0..2u8 {
        for a in 1..=19 {
            for b in -2..=2 {
                let s = c(a as f64 / 10.0, b as f64);
                let want = g_delta(delta, s).unwrap();
                let got = g_delta_integral(delta, s, &spec).unwrap();
                assert!((got - want).norm() < 1e-6, "δ={delta}, s={s}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn integral_is_cutoff_independent() {
    let specs = [
        CutoffSpec::default(),
        CutoffSpec { inner_radius: 0.5, outer_radius: 1.5, parts_count: 3 },
        CutoffSpec { inner_radius: 2.0, outer_radius: 5.0, parts_count: 2 },
        CutoffSpec { inner_radius: 0.8, outer_radius: 1.8, parts_count: 4 },
    ];
    for delta in 0..2u8 {
        for s in [c(0.25, 0.5), c(0.7, -1.3), c(1.4, 0.2)] {
            let vals: Vec<Complex64> = specs.iter().map(|sp| g_delta_integral(delta, s, sp).unwrap()).collect();
            for v in &vals[1..] {
                assert!((v - vals[0]).norm() < 1e-6, "δ={delta}, s={s}: {vals:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn gamma_reflection(re in -20.0f64..20.0, im in -20.0f64..20.0) {
        let z = c(re, im);
        prop_assume!(pole_gap(z) > 0.05 && pole_gap(1.0 - z) > 0.05);
        let v = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (PI * z).sin() / PI;
        prop_assert!((v - 1.0).norm() < 1e-11, "z = {}: {}", z, v);
    }

    #[test]
    fn gamma_recurrence(re in 0.1f64..30.0, im in -30.0f64..30.0) {
        let z = c(re, im);
        prop_assert!(rel(gamma(z + 1.0).unwrap(), z * gamma(z).unwrap()) < 1e-12);
    }

    #[test]
    fn gamma_r_duplication(re in 0.1f64..20.0, im in -10.0f64..10.0) {
        // Γ_R(s)Γ_R(s+1) = Γ_C(s) written through Legendre duplication for Γ itself
        let s = c(re, im);
        let lhs = gamma(s / 2.0).unwrap() * gamma((s + 1.0) / 2.0).unwrap();
        let rhs = 2.0 * PI.sqrt() * (-s * 2.0f64.ln()).exp() * gamma(s).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-12);
    }
}

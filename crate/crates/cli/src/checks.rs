//! The acceptance criteria as named checks.

use extsq_core::algebra::{generic_matrix, nhn_decompose, udl_explicit, udl_oracle};
use extsq_core::euler::{
    ext2_factor, ext2_reciprocal_poly, partial_l, primes_below, random_satake, standard_reciprocal_poly,
};
use extsq_core::lfactors::{fe_ratio_check, fe_sweep, holomorphy_check, random_repr, script_g, ReprData};
use extsq_core::report::{CheckResult, RunReport};
use extsq_core::shuffle::kappa::{kappa3_closed, parity_constraint_holds};
use extsq_core::shuffle::*;
use extsq_core::special::{g_delta, g_delta_integral, gamma_c, gamma_r, CutoffSpec};
use extsq_core::Error;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::sample;

pub const CRITERIA: usize = 12;

type Outcome = anyhow::Result<(bool, String)>;

fn check(name: &str, f: impl FnOnce() -> Outcome) -> CheckResult {
    match f() {
        Ok((ok, detail)) => CheckResult::new(name, ok, detail),
        Err(e) => CheckResult::fail(name, format!("error: {e}")),
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn within(err: f64, tol: f64) -> (bool, String) {
    (err <= tol, format!("max error {err:.2e} (tol {tol:.0e})"))
}

/// One independent stream per criterion, so the checks can run in any order.
fn rng_for(seed: u64, criterion: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(criterion as u64);
    rng
}

fn special_functions(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut out =
        vec![check("01-special/g0-half-closed", || Ok(within((g_delta(0, c(0.5, 0.0))? - 1.0).norm(), 1e-12)))];
    out.push(check("01-special/g0-half-quadrature", || {
        Ok(within((g_delta_integral(0, c(0.5, 0.0), &CutoffSpec::default())? - 1.0).norm(), 1e-6))
    }));
    out.push(check("01-special/g-reflection", || {
        let mut worst: f64 = 0.0;
        for delta in 0..2u8 {
            let want = if delta == 0 { 1.0 } else { -1.0 };
            let mut done = 0;
            while done < 100 {
                let s = c(rng.gen_range(-3.0..4.0), rng.gen_range(-8.0..8.0));
                let (Ok(a), Ok(b)) = (g_delta(delta, s), g_delta(delta, 1.0 - s)) else { continue };
                if a.norm() < 1e-8 || b.norm() < 1e-8 || !(a * b).is_finite() {
                    continue;
                }
                worst = worst.max((a * b - want).norm());
                done += 1;
            }
        }
        let (ok, d) = within(worst, 1e-10);
        Ok((ok, format!("100 points per parity, {d}")))
    }));
    out.push(check("01-special/gamma-c-identity", || {
        let mut worst: f64 = 0.0;
        let mut done = 0;
        while done < 200 {
            let s = Complex64::from_polar(rng.gen_range(0.0..30.0), rng.gen_range(0.0..std::f64::consts::TAU));
            let near_pole = s.re < 0.5 && (s - c(s.re.round(), 0.0)).norm() < 0.05;
            if near_pole || s.im.abs() > 25.0 {
                continue;
            }
            worst = worst.max(rel(gamma_c(s)?, gamma_r(s)? * gamma_r(s + 1.0)?));
            done += 1;
        }
        let (ok, d) = within(worst, 1e-12);
        Ok((ok, format!("200 points, {d}")))
    }));
    out
}

fn udl(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let symbolic = check("02-udl/generic-symbolic", || {
        for n in 1..=5 {
            let g = generic_matrix(n, &format!("acc{n}g"));
            let explicit = udl_explicit(&g)?;
            if explicit.reconstruct()? != g {
                return Ok((false, format!("n = {n}: explicit factors do not reconstruct g")));
            }
            if explicit.to_nhn()? != udl_oracle(&g)?.to_nhn()? {
                return Ok((false, format!("n = {n}: NHN data differs from elimination")));
            }
        }
        Ok((true, "n = 1..5 exact".into()))
    });
    let random = check("02-udl/random-rational", || {
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(1..=6);
            let g = sample::rational_matrix(rng, n);
            let Ok(explicit) = udl_explicit(&g) else { continue };
            let nhn = nhn_decompose(&g)?;
            if explicit.reconstruct()? != g || explicit.to_nhn()? != nhn || udl_oracle(&g)?.to_nhn()? != nhn {
                return Ok((false, format!("mismatch on sample {done}")));
            }
            done += 1;
        }
        Ok((true, "50 matrices exact".into()))
    });
    vec![symbolic, random]
}

fn superdiagonal(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let symbolic = check("03-superdiagonal/symbolic", || {
        for n in [2, 3] {
            let v = UnfoldVars::symbolic(n, &format!("acs{n}"));
            if superdiag_sum_oracle(&v)? != superdiag_sum(&v)? {
                return Ok((false, format!("n_half = {n}")));
            }
        }
        Ok((true, "n_half = 2, 3 exact".into()))
    });
    let random = check("03-superdiagonal/random-n4", || {
        let (mut done, mut attempts) = (0, 0);
        while done < 20 {
            attempts += 1;
            if attempts > 400 {
                return Ok((false, "too many degenerate samples".into()));
            }
            let v = sample::unfold_vars(rng, 4);
            let Ok(oracle) = superdiag_sum_oracle(&v) else { continue };
            if oracle != superdiag_sum(&v)? {
                return Ok((false, format!("sample {done}")));
            }
            done += 1;
        }
        Ok((true, "20 points exact".into()))
    });
    vec![symbolic, random]
}

fn alternating_sum() -> Vec<CheckResult> {
    vec![check("04-alternating-sum/symbolic", || {
        for n in [2, 3, 4] {
            let (l, r) = altsum_check(&UnfoldVars::symbolic(n, &format!("aca{n}")))?;
            if l != r {
                return Ok((false, format!("n_half = {n}")));
            }
        }
        Ok((true, "n_half = 2, 3, 4 exact".into()))
    })]
}

fn lower_factor() -> Vec<CheckResult> {
    vec![check("05-lower-factor/symbolic", || {
        for n in [2, 3] {
            let x = XVars::symbolic(n, &format!("acl{n}"));
            if lower_factor_recursive(&x)? != lower_factor_oracle(&x.to_unfold()?)? {
                return Ok((false, format!("n_half = {n}")));
            }
        }
        Ok((true, "n_half = 2, 3 exact".into()))
    })]
}

fn whittaker(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    vec![check("06-whittaker/closed-vs-oracle", || {
        let mut worst: f64 = 0.0;
        for n in [2, 3] {
            for _ in 0..100 {
                let x = sample::x_point(rng, n);
                let ep = sample::embedding(rng, 2 * n);
                worst = worst.max(rel(shuffled_whittaker_closed(&x, &ep)?, shuffled_whittaker_oracle(&x, &ep)?));
            }
        }
        let (ok, d) = within(worst, 1e-10);
        Ok((ok, format!("100 points per n_half, {d}")))
    })]
}

fn kappa() -> Vec<CheckResult> {
    vec![check("07-kappa/exhaustive", || {
        let mut checked = 0;
        for n in [2, 3] {
            for bits in 0u32..(1 << (2 * n)) {
                let delta: Vec<u8> = (0..2 * n).map(|k| ((bits >> k) & 1) as u8).collect();
                for eps in 0..2u8 {
                    for eta in 0..2u8 {
                        if !parity_constraint_holds(n, &delta, eps, eta) {
                            continue;
                        }
                        let k = kappa_signs(n, &delta, eps, eta)?;
                        if !k.product_matches() || k.kappa3 != kappa3_closed(n, &delta, eps, eta) {
                            return Ok((false, format!("n = {n}, δ = {delta:?}, ε = {eps}, η = {eta}")));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok((true, format!("{checked} sign patterns")))
    })]
}

fn gamma_table(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    vec![check("08-gamma-table/equals-script-g", || {
        let (mut worst, mut done): (f64, usize) = (0.0, 0);
        while done < 50 {
            let n = rng.gen_range(2..=4);
            let ep = sample::embedding(rng, 2 * n);
            let eta = rng.gen_range(0u8..=1);
            let sum: u32 = ep.delta.iter().map(|&d| d as u32).sum();
            let eps = ((sum + n as u32 * eta as u32) % 2) as u8;
            let g = script_g(&ep, eta);
            let s = c(rng.gen_range(0.55..0.95), rng.gen_range(-3.0..3.0));
            if g.pole_distance(s) < 1e-6 {
                continue;
            }
            worst = worst.max(rel(unfolded_gamma_table(&ep, eps, eta)?.eval(s)?, g.eval(s)?));
            done += 1;
        }
        let (ok, d) = within(worst, 1e-12);
        Ok((ok, format!("50 embeddings, {d}")))
    })]
}

fn repr_sample(rng: &mut ChaCha8Rng) -> ReprData {
    let n = rng.gen_range(1..=4);
    let eta = rng.gen_range(0u8..=1);
    random_repr(rng, n, eta)
}

fn functional_equation(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let mut unit_err: f64 = 0.0;
    let fe = check("09-functional-equation/ratio", || {
        let (mut worst, mut samples): (f64, usize) = (0.0, 0);
        for _ in 0..50 {
            let r = repr_sample(rng);
            let mut pts = Vec::new();
            while pts.len() < 3 {
                let s = c(rng.gen_range(-0.8..1.8), rng.gen_range(-3.0..3.0));
                match fe_ratio_check(&r, s) {
                    Ok(_) => pts.push(s),
                    Err(Error::NearPole(..)) => continue,
                    Err(e) => return Err(e.into()),
                }
            }
            let rep = fe_sweep(&r, &pts, 1e-8)?;
            worst = worst.max(rep.max_rel_err);
            for x in &rep.samples {
                unit_err = unit_err.max((x.omega.norm() - 1.0).abs()).max((x.omega.powi(4) - 1.0).norm());
            }
            samples += rep.samples.len();
        }
        let (ok, d) = within(worst, 1e-8);
        Ok((ok, format!("{samples} samples, {d}")))
    });
    let (ok, detail) = within(unit_err, 1e-12);
    let omega = CheckResult::new("09-functional-equation/omega-unit", ok, format!("|ω| = 1 and ω⁴ = 1, {detail}"));
    vec![fe, omega]
}

fn holomorphy(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    vec![check("10-holomorphy/poles-matched", || {
        let (mut poles, mut zeros) = (0, 0);
        for _ in 0..50 {
            let r = repr_sample(rng);
            let rep = holomorphy_check(&r)?;
            if !rep.passed || !rep.families_match {
                return Ok((false, format!("{}: {}", serde_json::to_string(&r)?, rep.failures.join("; "))));
            }
            poles += rep.poles.entries.len();
            zeros += rep.partial_zeros.len();
        }
        Ok((true, format!("50 cases, {poles} poles, {zeros} partial-product zeros away from poles")))
    })]
}

fn euler(rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let degree = check("11-euler/reciprocal-degree", || {
        for m in [2usize, 4, 6] {
            let (e, t) = ext2_reciprocal_poly(m);
            let (sp, ts) = standard_reciprocal_poly(m);
            if e.degree_in(t) as usize != (m / 2) * (m - 1) || sp.degree_in(ts) as usize != m {
                return Ok((false, format!("2n = {m}")));
            }
        }
        Ok((true, "2n = 2, 4, 6".into()))
    });
    let multiplicative = check("11-euler/multiplicativity", || {
        let mut worst: f64 = 0.0;
        for _ in 0..40 {
            let m = 2 * rng.gen_range(1..=3);
            let data: Vec<_> = primes_below(200).into_iter().map(|p| random_satake(rng, p, m)).collect();
            let s = c(rng.gen_range(1.5..3.0), rng.gen_range(-10.0..10.0));
            let whole = partial_l(&data, s)?;
            let mut acc = c(1.0, 0.0);
            for d in &data {
                acc *= partial_l(std::slice::from_ref(d), s)?;
            }
            worst = worst.max(rel(acc, whole));
        }
        let (ok, d) = within(worst, 1e-14);
        Ok((ok, format!("40 prime lists, {d}")))
    });
    let permutation = check("11-euler/permutation-invariance", || {
        let mut worst: f64 = 0.0;
        let primes = primes_below(100);
        for _ in 0..200 {
            let m = 2 * rng.gen_range(1..=4);
            let p = *primes.choose(rng).expect("primes");
            let d = random_satake(rng, p, m);
            let mut e = d.clone();
            e.alpha.shuffle(rng);
            let s = c(rng.gen_range(1.2..3.0), rng.gen_range(-10.0..10.0));
            worst = worst.max(rel(ext2_factor(&e, s)?, ext2_factor(&d, s)?));
        }
        let (ok, d) = within(worst, 1e-14);
        Ok((ok, format!("200 samples, {d}")))
    });
    vec![degree, multiplicative, permutation]
}

/// Runs criterion `k` (1 through 11) with its own stream of `seed`.
pub fn criterion(k: usize, seed: u64) -> Vec<CheckResult> {
    let mut rng = rng_for(seed, k);
    match k {
        1 => special_functions(&mut rng),
        2 => udl(&mut rng),
        3 => superdiagonal(&mut rng),
        4 => alternating_sum(),
        5 => lower_factor(),
        6 => whittaker(&mut rng),
        7 => kappa(),
        8 => gamma_table(&mut rng),
        9 => functional_equation(&mut rng),
        10 => holomorphy(&mut rng),
        11 => euler(&mut rng),
        _ => Vec::new(),
    }
}

fn sweep(seed: u64) -> Vec<CheckResult> {
    (1..CRITERIA).into_par_iter().flat_map_iter(|k| criterion(k, seed)).collect()
}

/// Criteria 1 through 11, then the sweep again to confirm it reproduces byte for byte.
pub fn suite(seed: u64) -> RunReport {
    let mut report = RunReport::new("suite", seed);
    report.extend(sweep(seed));
    let first = serde_json::to_string(&report.checks).expect("checks serialize");
    let mut again = RunReport::new("suite", seed);
    again.extend(sweep(seed));
    let second = serde_json::to_string(&again.checks).expect("checks serialize");
    report.push(CheckResult::new(
        "12-determinism/rerun",
        first == second,
        if first == second { "two sweeps serialize identically" } else { "sweeps differ" },
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_of_order() {
        let a = criterion(11, 5);
        let _ = criterion(1, 5);
        assert_eq!(criterion(11, 5), a);
        assert!(criterion(12, 5).is_empty());
    }

    #[test]
    fn errors_become_failures() {
        let r = check("x", || Err(anyhow::anyhow!("boom")));
        assert!(!r.passed() && r.detail.contains("boom"));
    }
}

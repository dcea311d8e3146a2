use num_complex::Complex64;

use super::satake::{ext2_factor, SatakeData};
use crate::error::{Error, Result};
use crate::lfactors::{full_level_violations, l_inf, ReprData};

/// Largest allowed `|α_j α_k χ(p)| p^{−Re s}` in a truncated product.
pub const DEFAULT_GUARD: f64 = 0.99;

/// Primes `p < x`.
pub fn primes_below(x: u64) -> Vec<u64> {
    if x < 3 {
        return Vec::new();
    }
    let n = x as usize;
    let mut sieve = vec![true; n];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            (i * i..n).step_by(i).for_each(|j| sieve[j] = false);
        }
        i += 1;
    }
    (0..n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

pub fn partial_l(data: &[SatakeData], s: Complex64) -> Result<Complex64> {
    partial_l_with_guard(data, s, DEFAULT_GUARD)
}

/// `∏_p L_p(s, π, Ext²⊗χ)` over the supplied primes, multiplied in increasing `p`.
pub fn partial_l_with_guard(data: &[SatakeData], s: Complex64, guard: f64) -> Result<Complex64> {
    let mut order: Vec<&SatakeData> = data.iter().collect();
    order.sort_by_key(|d| d.p);
    if let Some(w) = order.windows(2).find(|w| w[0].p == w[1].p) {
        return Err(Error::Shape(format!("prime {} supplied twice", w[0].p)));
    }
    let mut out = Complex64::new(1.0, 0.0);
    for d in order {
        d.check()?;
        let size = d.max_ext2_modulus() * (d.p as f64).powf(-s.re);
        if size > guard {
            return Err(Error::Domain(format!("p = {}: max |α_jα_kχ(p)| p^(−Re s) = {size:.4} exceeds {guard}", d.p)));
        }
        out *= ext2_factor(d, s)?;
    }
    Ok(out)
}

/// `Λ(s) = L_∞(s) ∏_p L_p(s)` at full level.
pub fn lambda_assembly(r: &ReprData, data: &[SatakeData], s: Complex64) -> Result<Complex64> {
    let bad = full_level_violations(r)?;
    if !bad.is_empty() {
        return Err(Error::InvalidRepr(format!("not full level: {}", bad.join("; "))));
    }
    if let Some(d) = data.iter().find(|d| d.alpha.len() != 2 * r.n_half) {
        return Err(Error::Shape(format!(
            "p = {} has {} Satake parameters, expected {}",
            d.p,
            d.alpha.len(),
            2 * r.n_half
        )));
    }
    Ok(l_inf(r)?.eval(s)? * partial_l(data, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CRat;
    use crate::lfactors::SignBlock;

    fn ones(p: u64, m: usize) -> SatakeData {
        SatakeData::new(p, vec![Complex64::new(1.0, 0.0); m], Complex64::new(1.0, 0.0)).unwrap()
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_below(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_below(2).is_empty());
        assert_eq!(primes_below(1000).len(), 168);
    }

    #[test]
    fn small_products() {
        let s = Complex64::new(3.0, 0.0);
        assert_eq!(partial_l(&[], s).unwrap(), Complex64::new(1.0, 0.0));
        let data: Vec<_> = primes_below(30).into_iter().rev().map(|p| ones(p, 4)).collect();
        let want: f64 = primes_below(30).iter().map(|&p| (1.0 - (p as f64).powi(-3)).powi(-6)).product();
        let got = partial_l(&data, s).unwrap();
        assert!((got.re - want).abs() < 1e-14 * want && got.im == 0.0);
        let one = partial_l(&data[..1], s).unwrap();
        assert_eq!(one, ext2_factor(&data[0], s).unwrap());
    }

    #[test]
    fn guard() {
        let data = [ones(2, 4)];
        assert!(partial_l(&data, Complex64::new(0.01, 0.0)).is_err());
        assert!(partial_l_with_guard(&data, Complex64::new(0.5, 0.0), 1.0).is_ok());
        assert!(partial_l(&[ones(3, 2), ones(3, 2)], Complex64::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn assembly() {
        let r = ReprData {
            n_half: 1,
            eta: 0,
            sign_blocks: vec![
                SignBlock { eps: 0, s: CRat::parse("-0.1").unwrap() },
                SignBlock { eps: 0, s: CRat::parse("0.1").unwrap() },
            ],
            ds_blocks: vec![],
        };
        let s = Complex64::new(2.0, 0.0);
        let linf = l_inf(&r).unwrap().eval(s).unwrap();
        assert_eq!(lambda_assembly(&r, &[], s).unwrap(), linf);
        let data: Vec<_> = primes_below(50).into_iter().map(|p| ones(p, 2)).collect();
        let v = lambda_assembly(&r, &data, s).unwrap();
        assert!(v.re > 0.0 && v.re.is_finite() && v.im.abs() < 1e-15 * v.re);
        assert!(lambda_assembly(&r, &[ones(2, 4)], s).is_err());
        let mut twisted = r.clone();
        twisted.eta = 1;
        assert!(lambda_assembly(&twisted, &[], s).is_err());
    }
}

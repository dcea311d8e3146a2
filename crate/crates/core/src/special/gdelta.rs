use num_complex::Complex64;

use super::gamma::{gamma_c, ln_gamma, nonpositive_integer};
use crate::algebra::{is_integer, CRat};
use crate::error::{Error, Result};

/// `i^k` for any integer `k`.
pub fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `Γ_R(a) / Γ_R(b)`, zero when only `b` is a pole and an error when `a` is.
pub fn gamma_r_ratio(a: Complex64, b: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(a / 2.0) {
        return Err(Error::Pole(format!("Γ_R at {}", 2 * k)));
    }
    if nonpositive_integer(b / 2.0).is_some() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let log_pi = std::f64::consts::PI.ln();
    Ok((ln_gamma(a / 2.0)? - ln_gamma(b / 2.0)? + (b - a) / 2.0 * log_pi).exp())
}

/// `G_δ(s) = i^δ Γ_R(s+δ) / Γ_R(1−s+δ)`.
pub fn g_delta(delta: u8, s: Complex64) -> Result<Complex64> {
    if delta > 1 {
        return Err(Error::Domain(format!("parity must be 0 or 1, got {delta}")));
    }
    let d = delta as f64;
    Ok(i_pow(delta as i64) * gamma_r_ratio(s + d, 1.0 - s + d)?)
}

/// The value of an exact complex number that is a (machine-sized) integer.
pub fn integer_value(z: &CRat) -> Option<i64> {
    (z.is_real() && is_integer(&z.re)).then(|| z.re.to_integer().try_into().ok()).flatten()
}

/// Both sides of `G_{η₁}(s+z₁) G_{η₂}(s+z₂) = i^{z₁−z₂+1} Γ_C(s+z₁) / Γ_C(1−s−z₂)`,
/// valid when `z₁ − z₂ ∈ 2ℤ + η₁ − η₂ + 1`.
pub fn gcancel(eta1: u8, eta2: u8, z1: &CRat, z2: &CRat, s: Complex64) -> Result<(Complex64, Complex64)> {
    let diff = z1 - z2;
    let d = integer_value(&diff)
        .filter(|d| (d - eta1 as i64 + eta2 as i64 - 1).rem_euclid(2) == 0)
        .ok_or_else(|| Error::Domain(format!("z1 − z2 = {diff} is not in 2ℤ + η1 − η2 + 1")))?;
    let (a, b) = (z1.to_c64(), z2.to_c64());
    let lhs = g_delta(eta1, s + a)? * g_delta(eta2, s + b)?;
    let den = gamma_c(1.0 - s - b);
    let rhs = match den {
        Ok(den) => i_pow(d + 1) * gamma_c(s + a)? / den,
        Err(_) => Complex64::new(0.0, 0.0),
    };
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn anchors() {
        assert!((g_delta(0, c(0.5, 0.0)).unwrap() - 1.0).norm() < 1e-12);
        assert!((g_delta(1, c(0.5, 0.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-12);
        let s = c(0.3, 0.7);
        assert!((g_delta(0, s).unwrap() * g_delta(0, 1.0 - s).unwrap() - 1.0).norm() < 1e-12);
        assert!((g_delta(1, s).unwrap() * g_delta(1, 1.0 - s).unwrap() + 1.0).norm() < 1e-12);
    }

    #[test]
    fn cosine_form_for_parity_zero() {
        let s = c(0.25, 0.5);
        let pi = std::f64::consts::PI;
        let want = 2.0 * c(2.0 * pi, 0.0).powc(-s) * super::super::gamma(s).unwrap() * (pi * s / 2.0).cos();
        assert!((g_delta(0, s).unwrap() - want).norm() < 1e-12);
    }

    #[test]
    fn poles_and_zeros() {
        assert!(matches!(g_delta(0, c(0.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(g_delta(1, c(-1.0, 0.0)), Err(Error::Pole(_))));
        assert!(g_delta(0, c(3.0, 0.0)).unwrap().norm() == 0.0);
        assert!(g_delta(1, c(2.0, 0.0)).unwrap().norm() == 0.0);
        assert!(g_delta(2, c(0.5, 0.0)).is_err());
    }

    #[test]
    fn gcancel_examples() {
        let z = |s: &str| CRat::parse(s).unwrap();
        for (e1, e2, z1, z2, s) in
            [(0, 1, "2", "0", c(0.6, 0.2)), (1, 0, "0", "0", c(0.4, 0.0)), (0, 0, "1/2", "-1/2", c(0.3, 0.1))]
        {
            let (l, r) = gcancel(e1, e2, &z(z1), &z(z2), s).unwrap();
            assert!((l - r).norm() < 1e-10 * l.norm(), "{e1} {e2} {z1} {z2}");
        }
        assert!(gcancel(1, 0, &z("1"), &z("0"), c(0.4, 0.0)).is_err());
        assert!(gcancel(0, 0, &z("2"), &z("0"), c(0.4, 0.0)).is_err());
        assert!(gcancel(0, 1, &z("1/2"), &z("0"), c(0.4, 0.0)).is_err());
    }
}

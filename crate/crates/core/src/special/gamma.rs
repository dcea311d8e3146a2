use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Some(k)` when `z` is the nonpositive integer `k`.
pub fn nonpositive_integer(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0).then_some(z.re as i64)
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        series += *c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// A logarithm of `Γ(z)` (branch unspecified; only its exponential is meaningful).
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::Pole(format!("Γ at {k}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// Complex `Γ(z)` by the Lanczos approximation with reflection.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(z) {
        return Err(Error::Pole(format!("Γ at {k}")));
    }
    if z.im == 0.0 && z.re > 0.0 && z.re.fract() == 0.0 && z.re <= 171.0 {
        let n = z.re as u32;
        return Ok(Complex64::new((1..n).map(f64::from).product(), 0.0));
    }
    if z.re < 0.5 {
        Ok(PI / ((PI * z).sin() * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// `Γ_R(s) = π^{−s/2} Γ(s/2)`.
pub fn gamma_r(s: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(s / 2.0) {
        return Err(Error::Pole(format!("Γ_R at {}", 2 * k)));
    }
    Ok(Complex64::new(PI, 0.0).powc(-s / 2.0) * gamma(s / 2.0)?)
}

/// `Γ_C(s) = 2 (2π)^{−s} Γ(s)`.
pub fn gamma_c(s: Complex64) -> Result<Complex64> {
    if let Some(k) = nonpositive_integer(s) {
        return Err(Error::Pole(format!("Γ_C at {k}")));
    }
    Ok(2.0 * Complex64::new(2.0 * PI, 0.0).powc(-s) * gamma(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn anchors() {
        assert!((gamma(c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((gamma(c(5.0, 0.0)).unwrap() - 24.0).norm() < 1e-12);
        assert!((gamma(c(0.5, 0.0)).unwrap() - PI.sqrt()).norm() < 1e-14);
        assert!((gamma(c(-0.5, 0.0)).unwrap() + 2.0 * PI.sqrt()).norm() < 1e-13);
        assert!(matches!(gamma(c(-3.0, 0.0)), Err(Error::Pole(_))));
        assert!((gamma_r(c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-14);
        assert!((gamma_r(c(2.0, 0.0)).unwrap() - 1.0 / PI).norm() < 1e-14);
        assert!((gamma_c(c(1.0, 0.0)).unwrap() - 1.0 / PI).norm() < 1e-14);
        assert!(gamma_r(c(-2.0, 0.0)).is_err());
        assert!(gamma_r(c(-1.0, 0.0)).is_ok());
    }

    #[test]
    fn known_complex_value() {
        // Γ(1+i) = 0.49801566811835604 − 0.15494982830181069 i
        let g = gamma(c(1.0, 1.0)).unwrap();
        assert!((g - c(0.498_015_668_118_356, -0.154_949_828_301_810_7)).norm() < 1e-14);
    }

    #[test]
    fn reference_values() {
        let cases = [
            (c(50.5, 0.0), c(4.290_462_912_351_96e63, 0.0)),
            (c(30.0, 40.0), c(1.874_199_767_303_780_2e21, -1.510_844_503_332_867_9e21)),
            (c(-3.7, 2.2), c(-6.119_087_203_837_204e-4, 3.466_363_064_900_241e-4)),
            (c(0.25, 0.5), c(0.515_524_490_135_069_1, -1.307_325_926_631_825_4)),
        ];
        for (z, want) in cases {
            let g = gamma(z).unwrap();
            assert!(((g - want) / want).norm() < 1e-12, "Γ({z}) = {g}");
            let via_ln = ln_gamma(z).unwrap().exp();
            assert!(((via_ln - want) / want).norm() < 1e-12, "exp lnΓ({z}) = {via_ln}");
        }
    }
}

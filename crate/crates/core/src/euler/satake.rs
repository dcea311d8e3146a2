use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{CRat, Poly};
use crate::error::{Error, Result};

/// Below this modulus a factor `1 − a·p^{−s}` counts as vanishing.
const VANISHING: f64 = 1e-14;

/// Serde adapter writing complex numbers as `"a+bi"` strings.
pub mod complex_str {
    use super::*;

    pub fn format(z: Complex64) -> String {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{}{}{}i", z.re, sign, z.im.abs())
    }

    pub fn parse(text: &str) -> Result<Complex64> {
        Ok(CRat::parse(text)?.to_c64())
    }

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(*z))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Complex64, D::Error> {
        parse(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|z| format(*z)))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Complex64>, D::Error> {
            Vec::<String>::deserialize(d)?.iter().map(|t| parse(t).map_err(serde::de::Error::custom)).collect()
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Unramified local data at a prime: Satake parameters of `π_p` and `χ(p)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SatakeData {
    pub p: u64,
    #[serde(with = "complex_str::vec")]
    pub alpha: Vec<Complex64>,
    #[serde(with = "complex_str", default = "one")]
    pub chi: Complex64,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

impl SatakeData {
    pub fn new(p: u64, alpha: Vec<Complex64>, chi: Complex64) -> Result<Self> {
        let d = SatakeData { p, alpha, chi };
        d.check()?;
        Ok(d)
    }

    pub fn check(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::Domain(format!("{} is not prime", self.p)));
        }
        if self.alpha.is_empty() || self.alpha.len() % 2 == 1 {
            return Err(Error::Shape(format!("need an even number of Satake parameters, got {}", self.alpha.len())));
        }
        if self.alpha.iter().any(|a| a.norm() == 0.0 || !a.is_finite()) {
            return Err(Error::Domain("Satake parameters must be finite and nonzero".into()));
        }
        if !self.chi.is_finite() || (self.chi.norm() != 0.0 && (self.chi.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::Domain(format!("χ(p) = {} is neither zero nor of unit modulus", self.chi)));
        }
        Ok(())
    }

    /// `p^{−s}`.
    pub fn t(&self, s: Complex64) -> Complex64 {
        (-s * (self.p as f64).ln()).exp()
    }

    /// The products `α_j α_k χ(p)` for `j < k` (one-based pairs).
    pub fn ext2_roots(&self) -> Vec<((usize, usize), Complex64)> {
        let m = self.alpha.len();
        let mut out = Vec::with_capacity(m * (m - 1) / 2);
        for j in 0..m {
            for k in j + 1..m {
                out.push(((j + 1, k + 1), self.alpha[j] * self.alpha[k] * self.chi));
            }
        }
        out
    }

    /// Data of the contragredient: `α ↦ α⁻¹`, `χ(p) ↦ χ(p)⁻¹` (zero stays zero).
    pub fn contragredient(&self) -> Self {
        let chi = if self.chi.norm() == 0.0 { self.chi } else { 1.0 / self.chi };
        SatakeData { p: self.p, alpha: self.alpha.iter().map(|a| 1.0 / a).collect(), chi }
    }

    /// `max_{j<k} |α_j α_k χ(p)|`.
    pub fn max_ext2_modulus(&self) -> f64 {
        self.ext2_roots().iter().map(|(_, r)| r.norm()).fold(0.0, f64::max)
    }
}

/// Unit-modulus Satake parameters and `χ(p)` drawn uniformly on the circle.
pub fn random_satake(rng: &mut impl Rng, p: u64, m: usize) -> SatakeData {
    let mut unit = || Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    let alpha = (0..m).map(|_| unit()).collect();
    SatakeData { p, alpha, chi: unit() }
}

/// `∏_{j<k} (1 − α_j α_k χ(p) p^{−s})^{−1}`.
pub fn ext2_factor(d: &SatakeData, s: Complex64) -> Result<Complex64> {
    d.check()?;
    let t = d.t(s);
    let mut den = one();
    for ((j, k), a) in d.ext2_roots() {
        let f = 1.0 - a * t;
        if f.norm() < VANISHING {
            return Err(Error::Pole(format!("factor ({j},{k}) at p = {} vanishes", d.p)));
        }
        den *= f;
    }
    Ok(1.0 / den)
}

/// `∏_j (1 − α_j p^{−s})^{−1}`.
pub fn standard_factor(d: &SatakeData, s: Complex64) -> Result<Complex64> {
    d.check()?;
    let t = d.t(s);
    let mut den = one();
    for (j, a) in d.alpha.iter().enumerate() {
        let f = 1.0 - a * t;
        if f.norm() < VANISHING {
            return Err(Error::Pole(format!("factor {} at p = {} vanishes", j + 1, d.p)));
        }
        den *= f;
    }
    Ok(1.0 / den)
}

/// `∏_{j<k} (1 − a_j a_k c T)` in indeterminates `a_1…a_m, c, T`; returns it with the id of `T`.
pub fn ext2_reciprocal_poly(m: usize) -> (Poly, usize) {
    let a: Vec<Poly> = (1..=m).map(|j| Poly::named(&format!("alpha{j}"))).collect();
    let c = Poly::named("chi");
    let t = Poly::named("T");
    let t_id = *t.vars().iter().next().expect("T is a variable");
    let mut out = Poly::one();
    for j in 0..m {
        for k in j + 1..m {
            out = out.mul(&Poly::one().sub(&a[j].mul(&a[k]).mul(&c).mul(&t)));
        }
    }
    (out, t_id)
}

/// `∏_j (1 − a_j T)` in indeterminates `a_1…a_m, T`.
pub fn standard_reciprocal_poly(m: usize) -> (Poly, usize) {
    let t = Poly::named("T");
    let t_id = *t.vars().iter().next().expect("T is a variable");
    let out = (1..=m).fold(Poly::one(), |acc, j| acc.mul(&Poly::one().sub(&Poly::named(&format!("alpha{j}")).mul(&t))));
    (out, t_id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trivial_parameters() {
        let d = SatakeData::new(3, vec![one(); 4], one()).unwrap();
        let s = c(1.3, 0.4);
        let t = d.t(s);
        assert!((ext2_factor(&d, s).unwrap() - (1.0 - t).powi(-6)).norm() < 1e-14);
        assert!((standard_factor(&d, s).unwrap() - (1.0 - t).powi(-4)).norm() < 1e-14);
    }

    #[test]
    fn inverse_pairs_give_chi_twice() {
        let (a, b) = (c(0.6, 0.8), c(-0.28, 0.96));
        let d = SatakeData::new(5, vec![a, 1.0 / a, b, 1.0 / b], c(0.0, 1.0)).unwrap();
        let hits = d.ext2_roots().iter().filter(|(_, r)| (r - d.chi).norm() < 1e-14).count();
        assert_eq!(hits, 2);
    }

    #[test]
    fn rank_one_is_determinant() {
        let (a, b) = (c(0.3, 0.2), c(-0.5, 0.1));
        let chi = c(0.0, -1.0);
        let d = SatakeData::new(2, vec![a, b], chi).unwrap();
        let s = c(0.9, -2.0);
        let want = 1.0 / (1.0 - a * b * chi * d.t(s));
        assert!((ext2_factor(&d, s).unwrap() - want).norm() < 1e-14);
        let std = 1.0 / ((1.0 - a * d.t(s)) * (1.0 - b * d.t(s)));
        assert!((standard_factor(&d, s).unwrap() - std).norm() < 1e-14);
    }

    #[test]
    fn vanishing_factor_is_named() {
        let d = SatakeData::new(2, vec![c(2.0, 0.0), c(1.0, 0.0)], one()).unwrap();
        let err = ext2_factor(&d, c(1.0, 0.0)).unwrap_err();
        assert!(err.to_string().contains("(1,2)"), "{err}");
    }

    #[test]
    fn degrees() {
        for m in [2, 4, 6] {
            let (e, t) = ext2_reciprocal_poly(m);
            assert_eq!(e.degree_in(t) as usize, m * (m - 1) / 2);
            let (sp, t) = standard_reciprocal_poly(m);
            assert_eq!(sp.degree_in(t) as usize, m);
        }
    }

    #[test]
    fn json_round_trip() {
        let d: SatakeData = serde_json::from_str(r#"{"p": 2, "alpha": ["1+0i", "0.5-0.5i"], "chi": "1+0i"}"#).unwrap();
        assert_eq!(d.alpha[1], c(0.5, -0.5));
        let back: SatakeData = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        assert!(SatakeData::new(4, vec![one(); 2], one()).is_err());
        assert!(SatakeData::new(2, vec![one(); 3], one()).is_err());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{format_rat, parse_rat, rat_int, rat_to_f64, Rat};
use crate::error::{Error, Result};

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        CRat { re, im: Rat::zero() }
    }

    pub fn zero() -> Self {
        CRat::default()
    }

    pub fn from_int(n: i64) -> Self {
        CRat::real(rat_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        CRat { re: &self.re * k, im: &self.im * k }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Parses `"a"`, `"bi"`, `"a+bi"`, `"a-bi"` with rational or decimal parts.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty complex literal".into()));
        }
        let Some(body) = t.strip_suffix(['i', 'j']) else {
            return Ok(CRat::real(parse_rat(&t)?));
        };
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => rat_int(1),
            "-" => rat_int(-1),
            s => parse_rat(s)?,
        };
        Ok(CRat { re: parse_rat(re_part)?, im })
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rat(&self.re));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}i", format_rat(&self.re), sign, format_rat(&self.im.abs()))
    }
}

impl Serialize for CRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CRat::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Add for &CRat {
    type Output = CRat;
    fn add(self, o: &CRat) -> CRat {
        CRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &CRat {
    type Output = CRat;
    fn sub(self, o: &CRat) -> CRat {
        CRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &CRat {
    type Output = CRat;
    fn mul(self, o: &CRat) -> CRat {
        CRat { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for &CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        CRat { re: -&self.re, im: -&self.im }
    }
}

impl Add for CRat {
    type Output = CRat;
    fn add(self, o: CRat) -> CRat {
        &self + &o
    }
}

impl Sub for CRat {
    type Output = CRat;
    fn sub(self, o: CRat) -> CRat {
        &self - &o
    }
}

impl Neg for CRat {
    type Output = CRat;
    fn neg(self) -> CRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn parses_common_forms() {
        assert_eq!(CRat::parse("0+0.2i").unwrap(), CRat::new(rat_int(0), rat(1, 5)));
        assert_eq!(CRat::parse("-0.2i").unwrap(), CRat::new(rat_int(0), rat(-1, 5)));
        assert_eq!(CRat::parse("1/2 - 3/4i").unwrap(), CRat::new(rat(1, 2), rat(-3, 4)));
        assert_eq!(CRat::parse("i").unwrap(), CRat::new(rat_int(0), rat_int(1)));
        assert_eq!(CRat::parse("-i").unwrap(), CRat::new(rat_int(0), rat_int(-1)));
        assert_eq!(CRat::parse("0.35").unwrap(), CRat::real(rat(7, 20)));
        assert_eq!(CRat::parse("1e-1+2e-1i").unwrap(), CRat::new(rat(1, 10), rat(1, 5)));
        assert!(CRat::parse("").is_err());
        assert!(CRat::parse("1+xi").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-7/3", "1/2+3i", "-1-1/5i", "0+1i"] {
            assert_eq!(CRat::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn arithmetic() {
        let a = CRat::parse("1+2i").unwrap();
        let b = CRat::parse("3-i").unwrap();
        assert_eq!(&a * &b, CRat::parse("5+5i").unwrap());
        assert_eq!(&a - &b, CRat::parse("-2+3i").unwrap());
        assert_eq!(a.conj(), CRat::parse("1-2i").unwrap());
    }
}

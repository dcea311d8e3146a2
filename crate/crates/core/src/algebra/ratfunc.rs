//! Rational functions in canonical reduced form.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::field::Field;
use super::poly::{gcd, var_id, Poly};
use super::rat::{parse_rat, Rat};
use crate::error::{Error, Result};

/// Quotient `num / den` with `gcd(num, den) = 1` and `den` having leading coefficient one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        RatFunc::from_poly(Poly::named(name))
    }

    /// Builds `num / den`, reducing to canonical form. Fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Degenerate("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::normalize(num, den)
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if One::is_one(&lc) {
            RatFunc { num, den }
        } else {
            let k = lc.recip();
            RatFunc { num: num.scale(&k), den: den.scale(&k) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one_poly()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::Degenerate("reciprocal of zero".into()));
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok(RatFunc { num: base.num.pow(e.unsigned_abs()), den: base.den.pow(e.unsigned_abs()) })
    }

    /// Evaluates at a rational point; fails if the denominator vanishes there.
    pub fn eval<F: Fn(usize) -> Rat>(&self, value: F) -> Result<Rat> {
        let d = self.den.eval(&value);
        if Zero::is_zero(&d) {
            return Err(Error::Degenerate("denominator vanishes at evaluation point".into()));
        }
        Ok(self.num.eval(&value) / d)
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, map: &HashMap<usize, RatFunc>) -> Result<Self> {
        let sub_poly = |p: &Poly| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(c.clone());
                let mut keep = Poly::one();
                for v in m.vars() {
                    let e = m.exp(v);
                    match map.get(&v) {
                        Some(r) => t = t.mul(&RatFunc { num: r.num.pow(e), den: r.den.pow(e) }),
                        None => keep = keep.mul(&Poly::var(v).pow(e)),
                    }
                }
                acc = acc.add(&t.mul(&RatFunc::from_poly(keep)));
            }
            acc
        };
        let n = sub_poly(&self.num);
        let d = sub_poly(&self.den);
        if d.is_zero() {
            return Err(Error::Degenerate("substitution annihilates denominator".into()));
        }
        Ok(n.div(&d))
    }

    /// Parses an expression built from rational literals, identifiers, `+ - * / ^` and parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), i: 0 };
        let r = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format!("trailing input in {text:?}")));
        }
        Ok(r)
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().map(|c| One::is_one(&c)).unwrap_or(false)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(Poly::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.is_polynomial() {
                return RatFunc { num, den: Poly::one() };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.is_polynomial() {
            return RatFunc { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.is_polynomial() {
            return RatFunc { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d).add(&o.num.mul(&b));
        if num.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&num, &g);
        let num = num.div_exact(&g2).expect("gcd divides");
        let den = self.den.mul(&d).div_exact(&g2).expect("gcd divides");
        Self::normalize(num, den)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RatFunc::from_poly(self.num.mul(&o.num));
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalize(a.mul(&c), b.mul(&d))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn div(&self, o: &Self) -> Self {
        if self.is_polynomial() && o.is_polynomial() {
            if let Some(q) = self.num.div_exact(&o.num) {
                return RatFunc::from_poly(q);
            }
        }
        self.mul(&o.recip().expect("division by zero rational function"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.num_terms() > 1 || s.contains('/') || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of {:?}", self.i, String::from_utf8_lossy(self.s)))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.i += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.i += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.power()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.div(&d);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.skip_ws();
            let neg = if self.s.get(self.i) == Some(&b'-') {
                self.i += 1;
                true
            } else {
                false
            };
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let e: i32 =
                std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().map_err(|_| self.err("bad exponent"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_digit() || self.s[self.i] == b'.') {
                    self.i += 1;
                }
                let lit = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(RatFunc::constant(parse_rat(lit)?))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                Ok(RatFunc::from_poly(Poly::var(var_id(name))))
            }
            _ => Err(self.err("expected a literal, identifier or '('")),
        }
    }
}

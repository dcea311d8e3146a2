//! Products and quotients of `Γ_R` and `Γ_C` factors with exact shifts.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_integer, rat_int, CRat, Rat};
use crate::error::{Error, Result};
use crate::special::{gamma_c, gamma_r, i_pow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaKind {
    R,
    C,
}

impl GammaKind {
    /// Spacing of the pole lattice `{0, −step, −2·step, …}`.
    fn step(self) -> i64 {
        match self {
            GammaKind::R => 2,
            GammaKind::C => 1,
        }
    }
}

/// `Γ_kind(s_sign·s + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaFactor {
    pub kind: GammaKind,
    pub s_sign: i8,
    pub shift: CRat,
}

impl GammaFactor {
    pub fn new(kind: GammaKind, s_sign: i8, shift: CRat) -> Self {
        GammaFactor { kind, s_sign, shift }
    }

    pub fn arg(&self, s: &CRat) -> CRat {
        if self.s_sign > 0 {
            s + &self.shift
        } else {
            &self.shift - s
        }
    }

    fn arg_c64(&self, s: Complex64) -> Complex64 {
        self.shift.to_c64() + s * self.s_sign as f64
    }

    pub fn is_pole_at(&self, s: &CRat) -> bool {
        let z = self.arg(s);
        z.is_real()
            && is_integer(&z.re)
            && !z.re.is_positive()
            && z.re.to_integer().is_multiple_of(&self.kind.step().into())
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let z = self.arg_c64(s);
        match self.kind {
            GammaKind::R => gamma_r(z),
            GammaKind::C => gamma_c(z),
        }
    }

    /// Distance from `s` to the nearest point where this factor has a pole.
    pub fn pole_distance(&self, s: Complex64) -> f64 {
        let z = self.arg_c64(s);
        let step = self.kind.step() as f64;
        let nearest = if z.re >= 0.0 { 0.0 } else { (z.re / step).round() * step };
        Complex64::new(z.re - nearest, z.im).norm()
    }

    /// The values of `s` with `re_lo ≤ Re s ≤ re_hi` at which this factor has a pole.
    pub fn poles_in_strip(&self, re_lo: &Rat, re_hi: &Rat) -> Vec<CRat> {
        let step = rat_int(self.kind.step());
        let sign = rat_int(self.s_sign as i64);
        // pole m sits at s = −sign·(shift + step·m)
        let base = -&self.shift.scale(&sign);
        let stride = -(&step * &sign);
        let (a, b) = (re_lo - &base.re, re_hi - &base.re);
        let (lo, hi) = if stride.is_positive() { (&a / &stride, &b / &stride) } else { (&b / &stride, &a / &stride) };
        let m_lo = lo.ceil().to_integer().max(0.into());
        let m_hi = hi.floor().to_integer();
        let mut out = Vec::new();
        let mut m = m_lo;
        while m <= m_hi {
            let mr = Rat::from_integer(m.clone());
            out.push(CRat::new(&base.re + &stride * &mr, base.im.clone()));
            m += 1;
        }
        out
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            GammaKind::R => "Γ_R",
            GammaKind::C => "Γ_C",
        };
        let var = if self.s_sign > 0 { "s" } else { "-s" };
        if self.shift.is_zero() {
            write!(f, "{kind}({var})")
        } else {
            let sh = self.shift.to_string();
            let sh = if sh.starts_with('-') { sh } else { format!("+{sh}") };
            write!(f, "{kind}({var}{sh})")
        }
    }
}

/// `i^unit · ∏ num / ∏ den`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GammaExpr {
    pub unit: u8,
    pub num: Vec<GammaFactor>,
    pub den: Vec<GammaFactor>,
}

impl GammaExpr {
    pub fn one() -> Self {
        GammaExpr::default()
    }

    pub fn from_num(num: Vec<GammaFactor>) -> Self {
        GammaExpr { unit: 0, num, den: Vec::new() }
    }

    /// `G_δ(s + shift) = i^δ Γ_R(s + shift + δ) / Γ_R(1 − s − shift + δ)`.
    pub fn g_factor(delta: u8, shift: &CRat) -> Self {
        let d = CRat::from_int((delta % 2) as i64);
        GammaExpr {
            unit: delta % 2,
            num: vec![GammaFactor::new(GammaKind::R, 1, shift + &d)],
            den: vec![GammaFactor::new(GammaKind::R, -1, CRat::from_int(1) - shift.clone() + d)],
        }
    }

    /// `Γ_C(s + a) / Γ_C(1 − s + b)`.
    pub fn gc_ratio(a: &CRat, b: &CRat) -> Self {
        GammaExpr {
            unit: 0,
            num: vec![GammaFactor::new(GammaKind::C, 1, a.clone())],
            den: vec![GammaFactor::new(GammaKind::C, -1, CRat::from_int(1) + b.clone())],
        }
    }

    pub fn times_i(mut self, k: i64) -> Self {
        self.unit = (self.unit as i64 + k).rem_euclid(4) as u8;
        self
    }

    pub fn mul(&self, other: &GammaExpr) -> Self {
        GammaExpr {
            unit: (self.unit + other.unit) % 4,
            num: self.num.iter().chain(&other.num).cloned().collect(),
            den: self.den.iter().chain(&other.den).cloned().collect(),
        }
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a GammaExpr>) -> Self {
        items.into_iter().fold(GammaExpr::one(), |acc, e| acc.mul(e))
    }

    pub fn inv(&self) -> Self {
        GammaExpr { unit: (4 - self.unit) % 4, num: self.den.clone(), den: self.num.clone() }
    }

    /// The expression in `1 − s`.
    pub fn reflect(&self) -> Self {
        let flip = |f: &GammaFactor| GammaFactor::new(f.kind, -f.s_sign, &f.shift + &CRat::from_int(f.s_sign as i64));
        GammaExpr {
            unit: self.unit,
            num: self.num.iter().map(flip).collect(),
            den: self.den.iter().map(flip).collect(),
        }
    }

    /// Sorted factors with common numerator/denominator factors cancelled.
    pub fn canonical(&self) -> Self {
        let mut count: BTreeMap<GammaFactor, i64> = BTreeMap::new();
        for f in &self.num {
            *count.entry(f.clone()).or_default() += 1;
        }
        for f in &self.den {
            *count.entry(f.clone()).or_default() -= 1;
        }
        let mut out = GammaExpr { unit: self.unit, ..GammaExpr::one() };
        for (f, c) in count {
            let target = if c > 0 { &mut out.num } else { &mut out.den };
            target.extend(std::iter::repeat_n(f, c.unsigned_abs() as usize));
        }
        out
    }

    /// Canonical form after `Γ_C(z) = Γ_R(z) Γ_R(z+1)`; two expressions are
    /// structurally equal when their normal forms agree.
    pub fn normal_form(&self) -> Self {
        let expand = |fs: &[GammaFactor]| -> Vec<GammaFactor> {
            fs.iter()
                .flat_map(|f| match f.kind {
                    GammaKind::R => vec![f.clone()],
                    GammaKind::C => vec![
                        GammaFactor::new(GammaKind::R, f.s_sign, f.shift.clone()),
                        GammaFactor::new(GammaKind::R, f.s_sign, &f.shift + &CRat::from_int(1)),
                    ],
                })
                .collect()
        };
        GammaExpr { unit: self.unit, num: expand(&self.num), den: expand(&self.den) }.canonical()
    }

    pub fn structurally_eq(&self, other: &GammaExpr) -> bool {
        self.normal_form() == other.normal_form()
    }

    /// Numeric value; zero where only denominator factors are singular.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let mut num = i_pow(self.unit as i64);
        for f in &self.num {
            num *= f.eval(s)?;
        }
        let mut den = Complex64::new(1.0, 0.0);
        for f in &self.den {
            match f.eval(s) {
                Ok(v) => den *= v,
                Err(Error::Pole(_)) => return Ok(Complex64::new(0.0, 0.0)),
                Err(e) => return Err(e),
            }
        }
        Ok(num / den)
    }

    /// Pole order at `s` (negative for a zero), counted on the argument lattices.
    pub fn order_at(&self, s: &CRat) -> i64 {
        let hits = |fs: &[GammaFactor]| fs.iter().filter(|f| f.is_pole_at(s)).count() as i64;
        hits(&self.num) - hits(&self.den)
    }

    pub fn pole_distance(&self, s: Complex64) -> f64 {
        self.num.iter().chain(&self.den).map(|f| f.pole_distance(s)).fold(f64::INFINITY, f64::min)
    }

    /// Points in the strip where some factor is singular, with their net order (possibly 0).
    pub fn singular_points(&self, re_lo: &Rat, re_hi: &Rat) -> BTreeMap<CRat, i64> {
        let mut out = BTreeMap::new();
        for f in self.num.iter().chain(&self.den) {
            for p in f.poles_in_strip(re_lo, re_hi) {
                out.entry(p).or_insert(0);
            }
        }
        for (p, o) in out.iter_mut() {
            *o = self.order_at(p);
        }
        out
    }

    /// Largest real part of a numerator pole, when every numerator factor is in `+s`.
    pub fn rightmost_pole_re(&self) -> Option<Rat> {
        if self.num.iter().any(|f| f.s_sign < 0) {
            return None;
        }
        self.num.iter().map(|f| -&f.shift.re).max()
    }

    pub fn is_one(&self) -> bool {
        self.unit == 0 && self.num.is_empty() && self.den.is_empty()
    }
}

impl fmt::Display for GammaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = ["", "i·", "-", "-i·"][self.unit as usize];
        let join = |fs: &[GammaFactor]| fs.iter().map(ToString::to_string).collect::<Vec<_>>().join("·");
        let num = if self.num.is_empty() { "1".to_string() } else { join(&self.num) };
        if self.den.is_empty() {
            write!(f, "{unit}{num}")
        } else {
            write!(f, "{unit}{num} / ({})", join(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::special::g_delta;

    fn c(s: &str) -> CRat {
        CRat::parse(s).unwrap()
    }

    #[test]
    fn g_factor_matches_g_delta() {
        let s = Complex64::new(0.3, 0.8);
        for d in 0..2 {
            let e = GammaExpr::g_factor(d, &c("0.1-0.2i"));
            let want = g_delta(d, s + Complex64::new(0.1, -0.2)).unwrap();
            assert!((e.eval(s).unwrap() - want).norm() < 1e-12);
        }
    }

    #[test]
    fn reflect_and_normal_form() {
        let e = GammaExpr::from_num(vec![GammaFactor::new(GammaKind::C, 1, c("1/2"))]);
        let s = Complex64::new(0.2, 0.4);
        let r = e.reflect();
        assert!((r.eval(s).unwrap() - e.eval(1.0 - s).unwrap()).norm() < 1e-12);
        let split = GammaExpr::from_num(vec![
            GammaFactor::new(GammaKind::R, 1, c("3/2")),
            GammaFactor::new(GammaKind::R, 1, c("1/2")),
        ]);
        assert!(e.structurally_eq(&split));
        assert!(e.mul(&e.inv()).normal_form().is_one());
    }

    #[test]
    fn lattice_orders() {
        let e = GammaExpr::g_factor(0, &c("0"));
        assert_eq!(e.order_at(&c("0")), 1);
        assert_eq!(e.order_at(&c("-2")), 1);
        assert_eq!(e.order_at(&c("1")), -1);
        assert_eq!(e.order_at(&c("3")), -1);
        assert_eq!(e.order_at(&c("2")), 0);
        let pts = e.singular_points(&rat(-3, 1), &rat(4, 1));
        let want: Vec<(CRat, i64)> =
            [("-2", 1), ("0", 1), ("1", -1), ("3", -1)].iter().map(|(p, o)| (c(p), *o)).collect();
        assert_eq!(pts.into_iter().collect::<Vec<_>>(), want);
    }

    #[test]
    fn strip_scan_with_complex_shift() {
        let f = GammaFactor::new(GammaKind::C, 1, c("-3/4+0.5i"));
        assert_eq!(f.poles_in_strip(&rat(1, 2), &rat(10, 1)), vec![c("3/4-0.5i")]);
        let g = GammaFactor::new(GammaKind::R, -1, c("1/4"));
        assert_eq!(g.poles_in_strip(&rat(0, 1), &rat(5, 1)), vec![c("1/4"), c("9/4"), c("17/4")]);
        assert!(f.pole_distance(Complex64::new(0.75, -0.5)) < 1e-15);
    }
}

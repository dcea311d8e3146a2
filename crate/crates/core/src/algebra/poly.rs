//! Sparse multivariate polynomials over the rationals.
//!
//! Indeterminates are interned process-wide; their order is the order in which
//! they were first declared. Monomials are compared in graded lexicographic
//! order with respect to that declaration order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use super::rat::{format_rat, Rat};

struct Registry {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Registry { names: Vec::new(), index: HashMap::new() }))
}

/// Interns an indeterminate name and returns its id.
pub fn var_id(name: &str) -> usize {
    if let Some(&id) = registry().read().unwrap().index.get(name) {
        return id;
    }
    let mut reg = registry().write().unwrap();
    if let Some(&id) = reg.index.get(name) {
        return id;
    }
    let id = reg.names.len();
    reg.names.push(name.to_string());
    reg.index.insert(name.to_string(), id);
    id
}

/// Declares a list of names in order, fixing their relative monomial order.
pub fn declare_vars<S: AsRef<str>>(names: &[S]) -> Vec<usize> {
    names.iter().map(|n| var_id(n.as_ref())).collect()
}

pub fn var_name(id: usize) -> String {
    registry().read().unwrap().names[id].clone()
}

/// Exponent vector indexed by variable id, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(Vec<u32>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(id: usize, e: u32) -> Self {
        if e == 0 {
            return Mono::one();
        }
        let mut v = vec![0; id + 1];
        v[id] = e;
        Mono(v)
    }

    fn trimmed(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Mono(v)
    }

    pub fn exp(&self, id: usize) -> u32 {
        self.0.get(id).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (i, e) in short.0.iter().enumerate() {
            v[i] += e;
        }
        Mono(v)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let mut v = other.0.clone();
        for (i, e) in self.0.iter().enumerate() {
            v[i] -= e;
        }
        Mono::trimmed(v)
    }

    pub fn meet(&self, other: &Mono) -> Mono {
        Mono::trimmed(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    fn without(&self, id: usize) -> Mono {
        let mut v = self.0.clone();
        if id < v.len() {
            v[id] = 0;
        }
        Mono::trimmed(v)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial as a map from monomials to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        Poly::constant(Rat::from_integer(c.into()))
    }

    pub fn var(id: usize) -> Self {
        Poly::monomial(Mono::var(id, 1), Rat::one())
    }

    pub fn named(name: &str) -> Self {
        Poly::var(var_id(name))
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.vars().collect::<Vec<_>>()).collect()
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut out, src) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &src.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_term(&self, m: &Mono, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(mm, c)| (mm.mul(m), c * k)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = acc.entry(m1.mul(m2)).or_insert_with(Rat::zero);
                *e += c1 * c2;
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Mono::one(),
        };
        it.fold(first, |acc, m| acc.meet(m))
    }

    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(mm, c)| (m.quotient_of(mm), c.clone())).collect() }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = (dm.clone(), dc.clone());
        if !self.divisible_shape(d) {
            return None;
        }
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let tm = dm.quotient_of(rm);
            let tc = rc / &dc;
            r = r.sub(&d.mul_term(&tm, &tc));
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Cheap necessary conditions for `d | self`: extreme monomials and per-variable degrees.
    fn divisible_shape(&self, d: &Poly) -> bool {
        let (Some((lo_s, _)), Some((lo_d, _))) = (self.terms.iter().next(), d.terms.iter().next()) else {
            return true;
        };
        if !lo_d.divides(lo_s) || d.total_degree() > self.total_degree() {
            return false;
        }
        let mut ds = vec![0u32; 0];
        for m in self.terms.keys() {
            if ds.len() < m.0.len() {
                ds.resize(m.0.len(), 0);
            }
            for (i, e) in m.0.iter().enumerate() {
                ds[i] = ds[i].max(*e);
            }
        }
        d.terms.keys().all(|m| m.0.iter().enumerate().all(|(i, e)| *e <= ds.get(i).copied().unwrap_or(0)))
    }

    /// Coefficients with respect to `v`: entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.without(v), c.clone());
        }
        out
    }

    fn coeff_of_power(&self, v: usize, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    pub fn eval<F: Fn(usize) -> Rat>(&self, value: F) -> Rat {
        let mut cache: HashMap<usize, Rat> = HashMap::new();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.vars() {
                let x = cache.entry(v).or_insert_with(|| value(v));
                t *= num_traits::pow(x.clone(), m.exp(v) as usize);
            }
            total += t;
        }
        total
    }

    /// Substitutes polynomials for some variables.
    pub fn substitute(&self, map: &HashMap<usize, Poly>) -> Poly {
        let mut out = Poly::zero();
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut keep = Mono::one();
            let mut t = Poly::constant(c.clone());
            for v in m.vars() {
                let e = m.exp(v);
                match map.get(&v) {
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        t = t.mul(pw);
                    }
                    None => keep = keep.mul(&Mono::var(v, e)),
                }
            }
            out = out.add(&t.mul_term(&keep, &Rat::one()));
        }
        out
    }

    /// Multiplies through by the lcm of coefficient denominators and divides by
    /// the gcd of numerators, keeping the leading coefficient positive.
    fn integer_primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero();
        }
        let mut l = num_bigint::BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut k = Rat::new(l, g);
        if self.leading_coeff().is_negative() {
            k = -k;
        }
        self.scale(&k)
    }
}

/// Greatest common divisor, normalized to leading coefficient one.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let gm = ma.meet(&mb);
    let g = gcd_core(&a.div_mono(&ma), &b.div_mono(&mb));
    g.mul_term(&gm, &Rat::one()).monic()
}

fn gcd_core(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.monic() == b.monic() {
        return a.monic();
    }
    let (small, large) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if small.total_degree() <= large.total_degree() && large.div_exact(small).is_some() {
        return small.monic();
    }
    let va = a.vars();
    let vb = b.vars();
    let common: Vec<usize> = va.intersection(&vb).copied().collect();
    if common.iter().all(|&v| degree_zero_by_evaluation(a, b, v)) {
        return Poly::one();
    }
    let v = match va.intersection(&vb).min_by_key(|&&v| (a.degree_in(v) + b.degree_in(v), v)) {
        Some(&v) => v,
        None => return Poly::one(),
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let gc = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if degree_zero_by_evaluation(&p, &q, v) {
        return gc.monic();
    }
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return gc.monic();
        }
        p = q;
        q = primitive_in(&r, v);
    }
    primitive_in(&q, v).mul(&gc).monic()
}

/// Specializes every variable except `v` to a fixed integer and returns the
/// coefficient list in `v`.
fn specialize(p: &Poly, v: usize, salt: u64) -> Vec<Rat> {
    let point = |u: usize| -> Rat {
        let h =
            (u as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt.wrapping_mul(0xBF58_476D_1CE4_E5B9));
        Rat::from_integer(((h >> 33) % 89 + 2).into())
    };
    let mut out = vec![Rat::zero(); p.degree_in(v) as usize + 1];
    for (m, c) in &p.terms {
        let mut t = c.clone();
        for u in m.vars() {
            if u != v {
                t *= num_traits::pow(point(u), m.exp(u) as usize);
            }
        }
        out[m.exp(v) as usize] += t;
    }
    out
}

fn univariate_gcd_degree(a: &[Rat], b: &[Rat]) -> usize {
    let trim = |mut x: Vec<Rat>| {
        while x.last().is_some_and(|c| c.is_zero()) {
            x.pop();
        }
        x
    };
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let f = a.last().unwrap() / &lb;
            for (i, c) in b.iter().enumerate() {
                a[i + k] -= &f * c;
            }
            a.pop();
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// One-sided test: `true` certifies that `gcd(p, q)` has degree zero in `v`.
fn degree_zero_by_evaluation(p: &Poly, q: &Poly, v: usize) -> bool {
    for salt in 0..2 {
        let ps = specialize(p, v, salt);
        let qs = specialize(q, v, salt);
        if ps.last().is_some_and(|c| c.is_zero()) || qs.last().is_some_and(|c| c.is_zero()) {
            continue;
        }
        return univariate_gcd_degree(&ps, &qs) == 0;
    }
    false
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &Poly, v: usize) -> Poly {
    let mut coeffs = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect::<Vec<_>>();
    coeffs.sort_by_key(|c| c.num_terms());
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd(&g, &c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn primitive_in(p: &Poly, v: usize) -> Poly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").integer_primitive()
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
pub fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let db = b.degree_in(v);
    let lcb = b.coeff_of_power(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lcr = r.coeff_of_power(v, dr);
        let shift = Mono::var(v, dr - db);
        r = r.mul(&lcb).sub(&b.mul(&lcr).mul_term(&shift, &Rat::one()));
        r = r.integer_primitive();
    }
    r
}

fn fmt_mono(m: &Mono) -> String {
    m.vars()
        .map(|v| {
            let e = m.exp(v);
            if e == 1 {
                var_name(v)
            } else {
                format!("{}^{}", var_name(v), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", format_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{}", fmt_mono(m))?;
            } else {
                write!(f, "{}*{}", format_rat(&a), fmt_mono(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn p(name: &str) -> Poly {
        Poly::named(name)
    }

    #[test]
    fn grlex_orders_by_degree_then_declaration() {
        declare_vars(&["pa", "pb"]);
        let a = Mono::var(var_id("pa"), 1);
        let b2 = Mono::var(var_id("pb"), 2);
        assert!(b2 > a);
        assert!(a > Mono::var(var_id("pb"), 1));
    }

    #[test]
    fn exact_division_and_failure() {
        let x = p("px");
        let y = p("py");
        let f = x.add(&y).mul(&x.sub(&y));
        assert_eq!(f.div_exact(&x.add(&y)).unwrap(), x.sub(&y));
        assert!(f.div_exact(&x).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let x = p("gx");
        let y = p("gy");
        let z = p("gz");
        let common = x.mul(&y).add(&z.scale(&rat(3, 2)));
        let a = common.mul(&x.add(&Poly::one()));
        let b = common.mul(&y.sub(&z)).mul(&x);
        assert_eq!(gcd(&a, &b), common.monic());
        assert_eq!(gcd(&x, &y), Poly::one());
        assert_eq!(gcd(&x.mul(&x).mul(&y), &x.mul(&z)), x);
    }

    #[test]
    fn substitution_and_eval_agree() {
        let x = p("sx");
        let y = p("sy");
        let f = x.mul(&x).sub(&y.scale(&rat(2, 1)));
        let mut map = HashMap::new();
        map.insert(var_id("sx"), y.add(&Poly::one()));
        let g = f.substitute(&map);
        let val = g.eval(|_| rat(3, 1));
        assert_eq!(val, rat(10, 1));
    }

    #[test]
    fn display_is_descending() {
        let x = p("dx");
        let f = x.mul(&x).scale(&rat(-1, 2)).add(&Poly::from_i64(3));
        assert_eq!(f.to_string(), "-1/2*dx^2 + 3");
    }
}

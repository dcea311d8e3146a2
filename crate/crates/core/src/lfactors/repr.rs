use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::embedding::EmbeddingParams;
use crate::algebra::{rat, CRat, Rat};
use crate::error::{Error, Result};

/// `sgn^ε[s]`, a character of `GL(1, ℝ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignBlock {
    pub eps: u8,
    pub s: CRat,
}

/// `D_k[s]`, a twisted discrete series of `GL(2, ℝ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsBlock {
    pub k: u32,
    pub s: CRat,
}

/// Induction data of a generic unitary representation of `GL(2n, ℝ)` and the twist parity `η`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprData {
    #[serde(rename = "n")]
    pub n_half: usize,
    #[serde(default)]
    pub eta: u8,
    #[serde(default)]
    pub sign_blocks: Vec<SignBlock>,
    #[serde(default)]
    pub ds_blocks: Vec<DsBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", content = "detail", rename_all = "snake_case")]
pub enum Violation {
    Size(String),
    Parity(String),
    Weight(String),
    UnitaryBound(String),
    DualClosure(String),
    OddR1(String),
    Ordering(String),
    Pairing(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, detail) = match self {
            Violation::Size(d) => ("size", d),
            Violation::Parity(d) => ("parity", d),
            Violation::Weight(d) => ("weight", d),
            Violation::UnitaryBound(d) => ("(b) |Re s| < 1/2", d),
            Violation::DualClosure(d) => ("(a) closure under s ↦ −conj(s)", d),
            Violation::OddR1(d) => ("r1 even", d),
            Violation::Ordering(d) => ("ordering", d),
            Violation::Pairing(d) => ("paired real parts", d),
        };
        write!(f, "{name}: {detail}")
    }
}

fn neg_conj(s: &CRat) -> CRat {
    -s.conj()
}

/// Within one real part, negative blocks sort by `(p, Im)` ascending and positive
/// blocks descending, so block `j` and block `r+1−j` are mirror images.
fn block_order(a: (&CRat, u32), b: (&CRat, u32)) -> Ordering {
    a.0.re.cmp(&b.0.re).then_with(|| {
        let key = (a.1, &a.0.im).cmp(&(b.1, &b.0.im));
        if a.0.re.is_positive() {
            key.reverse()
        } else {
            key
        }
    })
}

impl ReprData {
    pub fn r1(&self) -> usize {
        self.sign_blocks.len()
    }

    pub fn r2(&self) -> usize {
        self.ds_blocks.len()
    }

    pub fn is_full_level(&self) -> bool {
        self.eta == 0 && self.sign_blocks.iter().all(|b| b.eps == 0)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("representation data: {e}")))
    }

    /// Every violated condition, in a fixed order. Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.intrinsic_violations();
        out.extend(self.order_violations());
        out
    }

    pub fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            return Ok(());
        }
        Err(Error::InvalidRepr(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
    }

    /// Conditions that do not depend on the order of the blocks.
    fn intrinsic_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (r1, r2) = (self.r1(), self.r2());
        if self.n_half == 0 || r1 + 2 * r2 != 2 * self.n_half {
            out.push(Violation::Size(format!("r1 + 2 r2 = {} but 2n = {}", r1 + 2 * r2, 2 * self.n_half)));
        }
        if self.eta > 1 {
            out.push(Violation::Parity(format!("η = {}", self.eta)));
        }
        for (i, b) in self.sign_blocks.iter().enumerate() {
            if b.eps > 1 {
                out.push(Violation::Parity(format!("sign block {} has ε = {}", i + 1, b.eps)));
            }
        }
        for (j, b) in self.ds_blocks.iter().enumerate() {
            if b.k < 2 {
                out.push(Violation::Weight(format!("discrete series block {} has k = {}", j + 1, b.k)));
            }
        }
        let half = rat(1, 2);
        let shifts = self.sign_blocks.iter().map(|b| ("sign", &b.s)).chain(self.ds_blocks.iter().map(|b| ("ds", &b.s)));
        for (kind, s) in shifts {
            if s.re.abs() >= half {
                out.push(Violation::UnitaryBound(format!("{kind} block shift {s}")));
            }
        }
        let mut sign: Vec<(u8, CRat)> = self.sign_blocks.iter().map(|b| (b.eps, b.s.clone())).collect();
        let mut sign_dual: Vec<(u8, CRat)> = self.sign_blocks.iter().map(|b| (b.eps, neg_conj(&b.s))).collect();
        sign.sort();
        sign_dual.sort();
        if sign != sign_dual {
            out.push(Violation::DualClosure("sign blocks".into()));
        }
        let mut ds: Vec<(u32, CRat)> = self.ds_blocks.iter().map(|b| (b.k, b.s.clone())).collect();
        let mut ds_dual: Vec<(u32, CRat)> = self.ds_blocks.iter().map(|b| (b.k, neg_conj(&b.s))).collect();
        ds.sort();
        ds_dual.sort();
        if ds != ds_dual {
            out.push(Violation::DualClosure("discrete series blocks".into()));
        }
        if r1 % 2 == 1 {
            out.push(Violation::OddR1(format!("r1 = {r1}")));
        }
        out
    }

    fn order_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let sorted = |v: &[&Rat]| v.windows(2).all(|w| w[0] <= w[1]);
        let sign_re: Vec<&Rat> = self.sign_blocks.iter().map(|b| &b.s.re).collect();
        let ds_re: Vec<&Rat> = self.ds_blocks.iter().map(|b| &b.s.re).collect();
        if !sorted(&sign_re) {
            out.push(Violation::Ordering("sign block real parts are not nondecreasing".into()));
        }
        if !sorted(&ds_re) {
            out.push(Violation::Ordering("discrete series real parts are not nondecreasing".into()));
        }
        let r1 = self.r1();
        for i in 0..r1 / 2 {
            if sign_re[i] != &-sign_re[r1 - 1 - i] {
                out.push(Violation::Pairing(format!("Re s_{} ≠ −Re s_{}", i + 1, r1 - i)));
            }
        }
        let r2 = self.r2();
        for j in 0..r2 / 2 {
            let (a, b) = (&self.ds_blocks[j], &self.ds_blocks[r2 - 1 - j]);
            if a.s.re != -&b.s.re {
                out.push(Violation::Pairing(format!("Re t_{} ≠ −Re t_{}", j + 1, r2 - j)));
            } else if !a.s.re.is_zero() && a.k != b.k {
                out.push(Violation::Pairing(format!("k_{} = {} ≠ k_{} = {}", j + 1, a.k, r2 - j, b.k)));
            }
        }
        out
    }

    /// The same representation with the blocks permuted into the standard order.
    pub fn normalized(&self) -> Result<Self> {
        let intrinsic = self.intrinsic_violations();
        if !intrinsic.is_empty() {
            return Err(Error::InvalidRepr(intrinsic.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")));
        }
        let mut out = self.clone();
        out.sign_blocks.sort_by(|a, b| block_order((&a.s, a.eps as u32), (&b.s, b.eps as u32)));
        out.ds_blocks.sort_by(|a, b| block_order((&a.s, a.k), (&b.s, b.k)));
        out.check()?;
        Ok(out)
    }

    fn map_shifts(&self, f: impl Fn(&CRat) -> CRat) -> Self {
        ReprData {
            n_half: self.n_half,
            eta: self.eta,
            sign_blocks: self.sign_blocks.iter().map(|b| SignBlock { eps: b.eps, s: f(&b.s) }).collect(),
            ds_blocks: self.ds_blocks.iter().map(|b| DsBlock { k: b.k, s: f(&b.s) }).collect(),
        }
    }

    /// Data of the contragredient: every shift `s_i ↦ −s_i`.
    pub fn dual(&self) -> Result<Self> {
        self.map_shifts(|s| -s).normalized()
    }

    /// Data of the contragredient written with `s_i ↦ conj(s_i)`.
    pub fn dual_conj(&self) -> Result<Self> {
        self.map_shifts(CRat::conj).normalized()
    }
}

/// `(λ, δ)` of the embedding into the principal series, with the block layout
/// `(r1/2 ones, r2 twos, r1/2 ones)`.
pub fn casselman_embedding(r: &ReprData) -> Result<EmbeddingParams> {
    let r = r.normalized()?;
    let h = r.r1() / 2;
    let mut lambda = Vec::with_capacity(2 * r.n_half);
    let mut delta = Vec::with_capacity(2 * r.n_half);
    for b in &r.sign_blocks[..h] {
        lambda.push(-&b.s);
        delta.push(b.eps);
    }
    for b in &r.ds_blocks {
        let w = CRat::real(rat(b.k as i64 - 1, 2));
        lambda.push(-&b.s - w.clone());
        lambda.push(-&b.s + w);
        delta.push((b.k % 2) as u8);
        delta.push(0);
    }
    for b in &r.sign_blocks[h..] {
        lambda.push(-&b.s);
        delta.push(b.eps);
    }
    EmbeddingParams::new(lambda, delta)
}

/// Full-level checks: `η = 0`, all `ε = 0`, and `Σ λ = 0`.
pub fn full_level_violations(r: &ReprData) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if !r.is_full_level() {
        out.push("full level needs η = 0 and every ε = 0".to_string());
    }
    let sum = casselman_embedding(r)?.lambda_sum();
    if !sum.is_zero() {
        out.push(format!("Σλ = {sum} ≠ 0"));
    }
    Ok(out)
}

fn random_shift(rng: &mut impl Rng, tempered: bool) -> CRat {
    let re = if tempered { 0 } else { rng.gen_range(-45i64..=45) };
    CRat::new(rat(re, 100), rat(rng.gen_range(-100i64..=100), 100))
}

/// Random valid data for `GL(2n)`: shifts in hundredths, weights `2..=7`.
pub fn random_repr(rng: &mut impl Rng, n_half: usize, eta: u8) -> ReprData {
    let r2 = rng.gen_range(0..=n_half);
    let r1 = 2 * n_half - 2 * r2;
    let mut sign_blocks = Vec::with_capacity(r1);
    for _ in 0..r1 / 2 {
        let eps = rng.gen_range(0u8..=1);
        if rng.gen_bool(0.25) {
            for _ in 0..2 {
                sign_blocks.push(SignBlock { eps: rng.gen_range(0u8..=1), s: random_shift(rng, true) });
            }
        } else {
            let s = random_shift(rng, false);
            sign_blocks.push(SignBlock { eps, s: neg_conj(&s) });
            sign_blocks.push(SignBlock { eps, s });
        }
    }
    let mut ds_blocks = Vec::with_capacity(r2);
    for _ in 0..r2 / 2 {
        let k = rng.gen_range(2u32..=7);
        let tempered = rng.gen_bool(0.25);
        let s = random_shift(rng, tempered);
        ds_blocks.push(DsBlock { k, s: neg_conj(&s) });
        ds_blocks.push(DsBlock { k, s });
    }
    if r2 % 2 == 1 {
        ds_blocks.push(DsBlock { k: rng.gen_range(2u32..=7), s: random_shift(rng, true) });
    }
    ReprData { n_half, eta, sign_blocks, ds_blocks }.normalized().expect("random data is valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(s: &str) -> CRat {
        CRat::parse(s).unwrap()
    }

    fn sign(eps: u8, s: &str) -> SignBlock {
        SignBlock { eps, s: c(s) }
    }

    fn ds(k: u32, s: &str) -> DsBlock {
        DsBlock { k, s: c(s) }
    }

    #[test]
    fn validate_examples() {
        let ok =
            ReprData { n_half: 1, eta: 0, sign_blocks: vec![sign(0, "0.2i"), sign(0, "-0.2i")], ds_blocks: vec![] };
        assert!(ok.validate().is_empty());
        let boundary =
            ReprData { n_half: 1, eta: 0, sign_blocks: vec![sign(0, "-0.5"), sign(0, "0.5")], ds_blocks: vec![] };
        assert!(boundary.validate().iter().any(|v| matches!(v, Violation::UnitaryBound(_))));
        let lone = ReprData { n_half: 1, eta: 0, sign_blocks: vec![], ds_blocks: vec![ds(3, "0.1")] };
        assert!(lone.validate().iter().any(|v| matches!(v, Violation::DualClosure(_))));
        let paired = ReprData { n_half: 2, eta: 0, sign_blocks: vec![], ds_blocks: vec![ds(3, "-0.1"), ds(3, "0.1")] };
        assert!(paired.validate().is_empty());
    }

    #[test]
    fn odd_r1_and_ordering() {
        let odd = ReprData { n_half: 2, eta: 0, sign_blocks: vec![sign(0, "0")], ds_blocks: vec![ds(2, "0")] };
        let v = odd.validate();
        assert!(v.iter().any(|v| matches!(v, Violation::OddR1(_))));
        assert!(v.iter().any(|v| matches!(v, Violation::Size(_))));
        let unsorted =
            ReprData { n_half: 1, eta: 0, sign_blocks: vec![sign(1, "0.3"), sign(1, "-0.3")], ds_blocks: vec![] };
        assert!(unsorted.validate().iter().any(|v| matches!(v, Violation::Ordering(_))));
        let fixed = unsorted.normalized().unwrap();
        assert_eq!(fixed.sign_blocks[0].s, c("-0.3"));
    }

    #[test]
    fn ties_pair_weights() {
        let r = ReprData {
            n_half: 4,
            eta: 0,
            sign_blocks: vec![],
            ds_blocks: vec![ds(5, "0.2+0.1i"), ds(3, "0.2"), ds(3, "-0.2"), ds(5, "-0.2+0.1i")],
        };
        assert!(!r.validate().is_empty());
        let n = r.normalized().unwrap();
        assert_eq!(n.ds_blocks[0].k, n.ds_blocks[3].k);
        assert_eq!(n.ds_blocks[1].k, n.ds_blocks[2].k);
    }

    #[test]
    fn embedding_examples() {
        let zero = ReprData { n_half: 2, eta: 0, sign_blocks: vec![sign(0, "0"); 4], ds_blocks: vec![] };
        assert_eq!(casselman_embedding(&zero).unwrap(), EmbeddingParams::zero(4));
        let two = ReprData { n_half: 2, eta: 0, sign_blocks: vec![], ds_blocks: vec![ds(3, "0"), ds(3, "0")] };
        let e = casselman_embedding(&two).unwrap();
        assert_eq!(e.lambda, vec![c("-1"), c("1"), c("-1"), c("1")]);
        assert_eq!(e.delta, vec![1, 0, 1, 0]);
    }

    #[test]
    fn embedding_layout_with_both_kinds() {
        let r = ReprData {
            n_half: 2,
            eta: 0,
            sign_blocks: vec![sign(1, "0.25"), sign(1, "-0.25")],
            ds_blocks: vec![ds(4, "0.1i")],
        };
        let e = casselman_embedding(&r).unwrap();
        assert_eq!(e.lambda, vec![c("0.25"), c("-3/2-0.1i"), c("3/2-0.1i"), c("-0.25")]);
        assert_eq!(e.delta, vec![1, 0, 0, 1]);
    }

    #[test]
    fn duals_agree_and_json_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 1..=4 {
            let r = random_repr(&mut rng, n, 1);
            assert!(r.validate().is_empty());
            assert_eq!(r.dual().unwrap(), r.dual_conj().unwrap());
            let text = serde_json::to_string(&r).unwrap();
            assert_eq!(ReprData::from_json(&text).unwrap(), r);
        }
        let parsed = ReprData::from_json(r#"{"n":2,"eta":0,"sign_blocks":[{"eps":0,"s":"0+0.2i"},{"eps":0,"s":"-0.2i"}],"ds_blocks":[{"k":3,"s":"0"}]}"#).unwrap();
        assert!(parsed.validate().is_empty());
    }

    #[test]
    fn full_level() {
        let r = ReprData { n_half: 1, eta: 0, sign_blocks: vec![sign(0, "-0.1"), sign(0, "0.1")], ds_blocks: vec![] };
        assert!(full_level_violations(&r).unwrap().is_empty());
        let t = ReprData { n_half: 1, eta: 0, sign_blocks: vec![sign(0, "0.3i"), sign(0, "0.3i")], ds_blocks: vec![] };
        assert_eq!(full_level_violations(&t).unwrap().len(), 1);
    }
}

//! The factors of `𝒢` grouped by which embedding blocks their indices lie in.

use serde::{Deserialize, Serialize};

use super::gammaexpr::GammaExpr;
use super::linf::{g_product, l_inf, script_g};
use super::poles::{pole_enumeration, pole_families, PoleList};
use super::repr::{casselman_embedding, ReprData};
use crate::algebra::{rat, CRat};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    First,
    Two(usize),
    Second,
}

/// Which block each one-based embedding position lies in.
fn slots(r: &ReprData) -> Vec<Slot> {
    let h = r.r1() / 2;
    let mut out = vec![Slot::First; h];
    for l in 1..=r.r2() {
        out.push(Slot::Two(l));
        out.push(Slot::Two(l));
    }
    out.extend(std::iter::repeat_n(Slot::Second, h));
    out
}

/// The index sets `𝒮₁…𝒮₆` and the closed forms of `𝒢₁…𝒢₆`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialProducts {
    pub index_sets: Vec<Vec<(usize, usize)>>,
    pub closed: Vec<GammaExpr>,
    /// Pairs `i < j`, `i + j ≤ 2n` that fall in none of the six sets.
    pub unassigned: Vec<(usize, usize)>,
}

fn half(k: i64) -> CRat {
    CRat::real(rat(k, 2))
}

pub fn partial_products(r: &ReprData) -> Result<PartialProducts> {
    let r = r.normalized()?;
    let m = 2 * r.n_half;
    let r2 = r.r2();
    let slot = slots(&r);
    let mut index_sets = vec![Vec::new(); 6];
    let mut unassigned = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            if i + j > m {
                continue;
            }
            let set = match (slot[i - 1], slot[j - 1]) {
                (Slot::First, Slot::First) => Some(0),
                (Slot::First, Slot::Second) => Some(1),
                (Slot::First, Slot::Two(_)) => Some(2),
                (Slot::Two(a), Slot::Two(b)) if a == b => Some(3),
                (Slot::Two(a), Slot::Two(b)) if a + b == r2 + 1 => Some(4),
                (Slot::Two(a), Slot::Two(b)) if a + b <= r2 => Some(5),
                _ => None,
            };
            match set {
                Some(k) => index_sets[k].push((i, j)),
                None => unassigned.push((i, j)),
            }
        }
    }

    let eta = r.eta;
    let sb = &r.sign_blocks;
    let ds = &r.ds_blocks;
    let h = sb.len() / 2;
    let g = |delta: u32, shift: CRat| GammaExpr::g_factor((delta % 2) as u8, &shift);
    let mut closed = vec![GammaExpr::one(); 6];
    for i in 0..h {
        for j in i + 1..h {
            closed[0] = closed[0].mul(&g((sb[i].eps + sb[j].eps + eta) as u32, &sb[i].s + &sb[j].s));
            let jj = sb.len() - 1 - j;
            closed[1] = closed[1].mul(&g((sb[i].eps + sb[jj].eps + eta) as u32, &sb[i].s + &sb[jj].s));
        }
        for d in ds {
            let w = half(d.k as i64 - 1);
            let t = &sb[i].s + &d.s;
            closed[2] = closed[2].mul(&GammaExpr::gc_ratio(&(&t + &w), &(&w - &t)).times_i(d.k as i64));
        }
    }
    for l in 0..r2 / 2 {
        let (a, b) = (&ds[l], &ds[r2 - 1 - l]);
        closed[3] = closed[3].mul(&g(a.k + eta as u32, &a.s + &a.s));
        closed[4] = closed[4].mul(&g(a.k + b.k + eta as u32, &a.s + &b.s + half(a.k as i64 + b.k as i64 - 2)));
    }
    for l1 in 0..r2 {
        for l2 in l1 + 1..r2 {
            if l1 + l2 + 2 > r2 {
                continue;
            }
            let (a, b) = (&ds[l1], &ds[l2]);
            let t = &a.s + &b.s;
            let w1 = half(a.k as i64 + b.k as i64 - 2);
            let w2 = half((a.k as i64 - b.k as i64).abs());
            let sign = 2 * (a.k.max(b.k) as i64 % 2);
            let term = GammaExpr::gc_ratio(&(&t + &w1), &(&w1 - &t))
                .mul(&GammaExpr::gc_ratio(&(&t + &w2), &(&w2 - &t)))
                .times_i(sign);
            closed[5] = closed[5].mul(&term);
        }
    }
    Ok(PartialProducts { index_sets, closed, unassigned })
}

impl PartialProducts {
    /// `∏_{(i,j)∈𝒮_k} G_{δ_i+δ_j+η}(s − λ_i − λ_j)` for each `k`.
    pub fn from_index_sets(&self, r: &ReprData) -> Result<Vec<GammaExpr>> {
        let r = r.normalized()?;
        let e = casselman_embedding(&r)?;
        Ok(self.index_sets.iter().map(|set| g_product(&e, r.eta, |i, j| set.contains(&(i, j)))).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HolomorphyReport {
    pub poles: PoleList,
    pub families_match: bool,
    /// Zeros of some `𝒢_k` in `1/2 ≤ Re s < 1` away from the poles of `L_∞`. These occur when
    /// tempered discrete series blocks of different weights are paired in `𝒮₅`.
    pub partial_zeros: Vec<(usize, CRat)>,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// `L_∞` is pole- and zero-free in `Re s ≥ 1`, and each of its poles in `Re s ≥ 1/2`
/// is a pole of `𝒢` of at least the same order at which no `𝒢_k` vanishes.
pub fn holomorphy_check(r: &ReprData) -> Result<HolomorphyReport> {
    let r = r.normalized()?;
    let mut failures = Vec::new();
    let (half_re, one) = (rat(1, 2), rat(1, 1));

    let linf = l_inf(&r)?.total();
    if let Some(hi) = linf.rightmost_pole_re() {
        for (p, o) in linf.singular_points(&one, &hi.max(one.clone())) {
            if o != 0 {
                failures.push(format!("L_∞ has order {o} at {p} in Re s ≥ 1"));
            }
        }
    }
    if !linf.den.is_empty() {
        failures.push("L_∞ has denominator factors".into());
    }

    let poles = pole_enumeration(&r)?;
    let families_match = poles == pole_families(&r)?;
    if !families_match {
        failures.push("lattice scan and three-family poles differ".into());
    }

    let parts = partial_products(&r)?;
    if !parts.unassigned.is_empty() {
        failures.push(format!("index pairs outside 𝒮₁…𝒮₆: {:?}", parts.unassigned));
    }
    let e = casselman_embedding(&r)?;
    let g = script_g(&e, r.eta);
    let from_sets = parts.from_index_sets(&r)?;
    if !GammaExpr::product(&from_sets).structurally_eq(&g) {
        failures.push("𝒮₁…𝒮₆ factors do not multiply to 𝒢".into());
    }
    let top = rat(2, 1);
    let mut partial_zeros = Vec::new();
    for (k, (closed, direct)) in parts.closed.iter().zip(&from_sets).enumerate() {
        let mut pts = closed.singular_points(&half_re, &top);
        pts.extend(direct.singular_points(&half_re, &top));
        for p in pts.keys() {
            let (a, b) = (closed.order_at(p), direct.order_at(p));
            if a != b {
                failures.push(format!("𝒢{} closed form has order {a} at {p}, factor product has {b}", k + 1));
            }
            if a < 0 && p.re < one {
                partial_zeros.push((k + 1, p.clone()));
            }
        }
    }
    for (p, order) in poles.by_location() {
        let go = g.order_at(&p);
        if go < order as i64 {
            failures.push(format!("L_∞ pole of order {order} at {p} but 𝒢 has order {go}"));
        }
        for (k, closed) in parts.closed.iter().enumerate() {
            if closed.order_at(&p) < 0 {
                failures.push(format!("𝒢{} vanishes at the L_∞ pole {p}", k + 1));
            }
        }
    }
    let passed = failures.is_empty();
    Ok(HolomorphyReport { poles, families_match, partial_zeros, failures, passed })
}

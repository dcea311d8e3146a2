use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::linf::l_inf;
use super::repr::ReprData;
use crate::algebra::{rat, CRat, Rat};
use crate::error::Result;

/// The piece of `L_∞` a pole comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PoleFamily {
    Pi2,
    Pi3,
    Pi4,
    Pi5,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleEntry {
    pub location: CRat,
    pub order: u32,
    pub family: PoleFamily,
}

/// Poles in `Re s ≥ 1/2`, sorted by location then family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleList {
    pub entries: Vec<PoleEntry>,
}

impl PoleList {
    fn from_counts(counts: BTreeMap<(CRat, PoleFamily), u32>) -> Self {
        PoleList {
            entries: counts
                .into_iter()
                .map(|((location, family), order)| PoleEntry { location, order, family })
                .collect(),
        }
    }

    /// Total order at each location.
    pub fn by_location(&self) -> BTreeMap<CRat, u32> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry(e.location.clone()).or_default() += e.order;
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Poles of `L_∞` in `Re s ≥ 1/2`, found by scanning every `Γ` argument lattice.
pub fn pole_enumeration(r: &ReprData) -> Result<PoleList> {
    let l = l_inf(r)?;
    let lo = rat(1, 2);
    let mut counts = BTreeMap::new();
    let families = [PoleFamily::Pi2, PoleFamily::Pi3, PoleFamily::Pi4, PoleFamily::Pi5];
    for (piece, family) in l.pieces().into_iter().zip(families) {
        let Some(hi) = piece.rightmost_pole_re() else { continue };
        for (p, order) in piece.singular_points(&lo, &hi) {
            if order > 0 {
                counts.insert((p, family), order as u32);
            }
        }
    }
    Ok(PoleList::from_counts(counts))
}

/// The same poles from the three closed-form families.
pub fn pole_families(r: &ReprData) -> Result<PoleList> {
    let r = r.normalized()?;
    let eta = r.eta as u32;
    let (quarter, half, one) = (rat(1, 4), rat(1, 2), Rat::from_integer(1.into()));
    let mut counts: BTreeMap<(CRat, PoleFamily), u32> = BTreeMap::new();
    let in_range = |x: &Rat, lo: &Rat, hi: &Rat| x >= lo && x < hi;
    let ds = &r.ds_blocks;
    for d in &ds[..ds.len() / 2] {
        let neg = -&d.s.re;
        if d.k % 2 == eta % 2 && in_range(&neg, &quarter, &half) {
            *counts.entry((-(&d.s + &d.s), PoleFamily::Pi2)).or_default() += 1;
        }
    }
    let sb = &r.sign_blocks;
    let h = sb.len() / 2;
    for i in 0..h {
        for k in i + 1..h {
            let neg = -(&sb[i].s.re + &sb[k].s.re);
            if (sb[i].eps as u32 + sb[k].eps as u32 + eta).is_multiple_of(2) && in_range(&neg, &half, &one) {
                *counts.entry((-(&sb[i].s + &sb[k].s), PoleFamily::Pi4)).or_default() += 1;
            }
        }
    }
    let h2 = ds.len() / 2;
    for j in 0..h2 {
        for l in j + 1..h2 {
            let neg = -(&ds[j].s.re + &ds[l].s.re);
            if ds[j].k == ds[l].k && in_range(&neg, &half, &one) {
                *counts.entry((-(&ds[j].s + &ds[l].s), PoleFamily::Pi5)).or_default() += 1;
            }
        }
    }
    Ok(PoleList::from_counts(counts))
}

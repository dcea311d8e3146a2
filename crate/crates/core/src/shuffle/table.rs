//! Gamma factors produced by integrating the unfolded integrand one x-coordinate at a time.

use num_complex::Complex64;
use serde::Serialize;

use super::kappa::{kappa2, kappa_signs};
use super::vars::x_indices;
use crate::algebra::{rat_int, CRat};
use crate::error::{Error, Result};
use crate::lfactors::EmbeddingParams;
use crate::special::g_delta;

/// One factor `G_parity(s + shift)`, coming from the integral over `x_{i, i+j−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaTableEntry {
    pub i: usize,
    pub j: usize,
    pub shift: CRat,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaTable {
    pub entries: Vec<GammaTableEntry>,
    pub sign: i8,
}

impl GammaTable {
    /// `∏ G_parity(s + shift)`, without the sign.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        self.entries
            .iter()
            .try_fold(Complex64::new(1.0, 0.0), |acc, en| Ok(acc * g_delta(en.parity, s + en.shift.to_c64())?))
    }
}

/// Each `x_{i,j}` carries `|x|^{s+j−2n−1} sgn(x)^η` from the measure and
/// `|x|^{−λ_i−λ_{j+1−i}+2n−j} sgn(x)^{δ_i+δ_{j+1−i}}` from the Whittaker
/// function; integrating `e(±x)|x|^{s+a−1} sgn(x)^p` gives `(±1)^p G_p(s+a)`.
pub fn unfolded_gamma_table(ep: &EmbeddingParams, eps: u8, eta: u8) -> Result<GammaTable> {
    let m = ep.len();
    if !m.is_multiple_of(2) || m < 4 {
        return Err(Error::Shape(format!("need an even number ≥ 4 of parameters, got {m}")));
    }
    let n = m / 2;
    let mut entries = Vec::new();
    let mut exp_sign = 1i8;
    for (i, jx) in x_indices(n) {
        let k = jx + 1 - i;
        let measure = rat_int(jx as i64 - 2 * n as i64 - 1);
        let whittaker = &CRat::real(rat_int(2 * n as i64 - jx as i64)) - &(ep.lam(i) + ep.lam(k));
        let exponent_minus_s = &CRat::real(measure) + &whittaker;
        let shift = &exponent_minus_s + &CRat::from_int(1);
        let parity = (ep.del(i) + ep.del(k) + eta) % 2;
        if jx == 2 * n - 1 && parity == 1 {
            exp_sign = -exp_sign;
        }
        entries.push(GammaTableEntry { i, j: k, shift, parity });
    }
    entries.sort_by_key(|e| (e.i, e.j));
    let signs = kappa_signs(n, &ep.delta, eps, eta)?;
    let sign = signs.kappa1_prime * kappa2(n, &ep.delta) * exp_sign;
    Ok(GammaTable { entries, sign })
}

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::embedding::EmbeddingParams;
use super::gammaexpr::{GammaExpr, GammaFactor, GammaKind};
use super::repr::ReprData;
use crate::algebra::{rat, CRat};
use crate::error::Result;
use crate::special::i_pow;

/// `L_∞(s, π, Ext²⊗χ)` split into its four pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LInf {
    /// `Γ_R(s + 2t_j + ε′_{jη})` over the discrete series blocks.
    pub pi2: GammaExpr,
    /// `Γ_C(s + s_i + t_j + (k_j−1)/2)` over sign × discrete series blocks.
    pub pi3: GammaExpr,
    /// `Γ_R(s + s_i + s_k + ε_{ikη})` over pairs of sign blocks.
    pub pi4: GammaExpr,
    /// The two `Γ_C` factors for each pair of discrete series blocks.
    pub pi5: GammaExpr,
}

impl LInf {
    pub fn pieces(&self) -> [&GammaExpr; 4] {
        [&self.pi2, &self.pi3, &self.pi4, &self.pi5]
    }

    pub fn total(&self) -> GammaExpr {
        GammaExpr::product(self.pieces())
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        self.total().eval(s)
    }
}

fn half(k: i64) -> CRat {
    CRat::real(rat(k, 2))
}

pub fn l_inf(r: &ReprData) -> Result<LInf> {
    let r = r.normalized()?;
    let eta = r.eta as u32;
    let rf = |shift: CRat| GammaFactor::new(GammaKind::R, 1, shift);
    let cf = |shift: CRat| GammaFactor::new(GammaKind::C, 1, shift);
    let mut out = LInf { pi2: GammaExpr::one(), pi3: GammaExpr::one(), pi4: GammaExpr::one(), pi5: GammaExpr::one() };
    for d in &r.ds_blocks {
        let eps = ((d.k + eta) % 2) as i64;
        out.pi2.num.push(rf(&d.s + &d.s + CRat::from_int(eps)));
    }
    for b in &r.sign_blocks {
        for d in &r.ds_blocks {
            out.pi3.num.push(cf(&b.s + &d.s + half(d.k as i64 - 1)));
        }
    }
    for (i, a) in r.sign_blocks.iter().enumerate() {
        for b in &r.sign_blocks[i + 1..] {
            let eps = ((a.eps + b.eps) as u32 + eta) % 2;
            out.pi4.num.push(rf(&a.s + &b.s + CRat::from_int(eps as i64)));
        }
    }
    for (j, a) in r.ds_blocks.iter().enumerate() {
        for b in &r.ds_blocks[j + 1..] {
            let t = &a.s + &b.s;
            out.pi5.num.push(cf(&t + &half(a.k as i64 + b.k as i64 - 2)));
            out.pi5.num.push(cf(t + half((a.k as i64 - b.k as i64).abs())));
        }
    }
    Ok(out)
}

/// `∏ G_{δ_i+δ_j+η}(s − λ_i − λ_j)` over `i < j` satisfying `keep(i, j)` (one-based).
pub fn g_product(e: &EmbeddingParams, eta: u8, keep: impl Fn(usize, usize) -> bool) -> GammaExpr {
    let m = e.len();
    let mut out = GammaExpr::one();
    for i in 1..=m {
        for j in i + 1..=m {
            if keep(i, j) {
                let shift = -(e.lam(i) + e.lam(j));
                out = out.mul(&GammaExpr::g_factor((e.del(i) + e.del(j) + eta) % 2, &shift));
            }
        }
    }
    out
}

/// `𝒢(s) = ∏_{i<j, i+j≤2n} G_{δ_i+δ_j+η}(s − λ_i − λ_j)`.
pub fn script_g(e: &EmbeddingParams, eta: u8) -> GammaExpr {
    let m = e.len();
    g_product(e, eta, |i, j| i + j <= m)
}

/// `𝒢̃(s) = ∏_{i<j, i+j>2n+1} G_{δ_i+δ_j+η}(s + λ_i + λ_j)`.
pub fn script_g_tilde(e: &EmbeddingParams, eta: u8) -> GammaExpr {
    let m = e.len();
    let neg = EmbeddingParams { lambda: e.lambda.iter().map(|l| -l).collect(), delta: e.delta.clone() };
    g_product(&neg, eta, |i, j| i + j > m + 1)
}

/// The right side of the functional equation without its constant: the product over all `i < j`.
pub fn fe_g_product(e: &EmbeddingParams, eta: u8) -> GammaExpr {
    g_product(e, eta, |_, _| true)
}

/// Exponent `k` with `ω = i^k`:
/// `−Σ_{i<k≤r1} ε_{ikη} + Σ_j (k_j(2j − 2n) − ε′_{jη})`, discrete series indexed by decreasing weight.
pub fn omega_exponent(r: &ReprData) -> Result<i64> {
    let r = r.normalized()?;
    let eta = r.eta as i64;
    let m = 2 * r.n_half as i64;
    let mut ex = 0;
    for (i, a) in r.sign_blocks.iter().enumerate() {
        for b in &r.sign_blocks[i + 1..] {
            ex -= (a.eps as i64 + b.eps as i64 + eta) % 2;
        }
    }
    let mut weights: Vec<i64> = r.ds_blocks.iter().map(|d| d.k as i64).collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    for (j, k) in weights.into_iter().enumerate() {
        ex += k * (2 * (j as i64 + 1) - m) - (k + eta) % 2;
    }
    Ok(ex.rem_euclid(4))
}

pub fn omega(r: &ReprData) -> Result<Complex64> {
    Ok(i_pow(omega_exponent(r)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfactors::repr::{casselman_embedding, DsBlock, SignBlock};
    use crate::special::{gamma_c, gamma_r};
    use std::f64::consts::PI;

    fn c(s: &str) -> CRat {
        CRat::parse(s).unwrap()
    }

    #[test]
    fn zero_sign_blocks() {
        let r =
            ReprData { n_half: 2, eta: 0, sign_blocks: vec![SignBlock { eps: 0, s: c("0") }; 4], ds_blocks: vec![] };
        let l = l_inf(&r).unwrap().total();
        let want = GammaExpr::from_num(vec![GammaFactor::new(GammaKind::R, 1, c("0")); 6]);
        assert!(l.structurally_eq(&want));
        assert!((l.eval(Complex64::new(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-12);
        assert_eq!(omega(&r).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn two_weight_three_blocks() {
        let r = ReprData { n_half: 2, eta: 0, sign_blocks: vec![], ds_blocks: vec![DsBlock { k: 3, s: c("0") }; 2] };
        let l = l_inf(&r).unwrap().total();
        let want = GammaExpr::from_num(vec![
            GammaFactor::new(GammaKind::R, 1, c("1")),
            GammaFactor::new(GammaKind::R, 1, c("1")),
            GammaFactor::new(GammaKind::C, 1, c("2")),
            GammaFactor::new(GammaKind::C, 1, c("0")),
        ]);
        assert!(l.structurally_eq(&want));
        let v = l.eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - 1.0 / (2.0 * PI.powi(6))).abs() < 1e-14 && v.im.abs() < 1e-15);
        let direct = gamma_r(Complex64::new(2.0, 0.0)).unwrap().powi(2)
            * gamma_c(Complex64::new(3.0, 0.0)).unwrap()
            * gamma_c(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v - direct).norm() < 1e-15);
    }

    #[test]
    fn script_g_small() {
        let e = EmbeddingParams::zero(4);
        let g = script_g(&e, 0);
        let g0 = GammaExpr::g_factor(0, &CRat::zero());
        assert_eq!(g.normal_form(), g0.mul(&g0).normal_form());
        let t = script_g_tilde(&e, 0);
        assert_eq!(t.normal_form(), g.normal_form());
    }

    #[test]
    fn tilde_is_script_g_of_contragredient() {
        let r = ReprData {
            n_half: 3,
            eta: 1,
            sign_blocks: vec![SignBlock { eps: 1, s: c("-0.2+0.1i") }, SignBlock { eps: 1, s: c("0.2+0.1i") }],
            ds_blocks: vec![DsBlock { k: 4, s: c("-0.3") }, DsBlock { k: 4, s: c("0.3") }],
        };
        let e = casselman_embedding(&r).unwrap();
        assert_eq!(script_g_tilde(&e, 1).normal_form(), script_g(&e.contragredient(), 1).normal_form());
    }
}

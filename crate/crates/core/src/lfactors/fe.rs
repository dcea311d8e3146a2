//! `L_∞(s, π) / L_∞(1−s, π̃) = ω ∏_{i<j≤2n} G_{δ_i+δ_j+η}(s − λ_i − λ_j)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linf::{fe_g_product, l_inf, omega};
use super::repr::{casselman_embedding, ReprData};
use crate::error::{Error, Result};

/// Closer than this to a `Γ` pole of either side, a sample is rejected.
pub const POLE_GUARD: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeSample {
    pub s: Complex64,
    pub lhs: Complex64,
    /// The `G`-product, without the constant.
    pub rhs: Complex64,
    /// `ω` from its closed form.
    pub omega: Complex64,
    /// `lhs / rhs`.
    pub constant: Complex64,
}

impl FeSample {
    pub fn relative_error(&self) -> f64 {
        (self.lhs - self.omega * self.rhs).norm() / self.lhs.norm()
    }
}

pub fn fe_ratio_check(r: &ReprData, s: Complex64) -> Result<FeSample> {
    let r = r.normalized()?;
    let lhs_expr = l_inf(&r)?.total().mul(&l_inf(&r.dual()?)?.total().reflect().inv());
    let rhs_expr = fe_g_product(&casselman_embedding(&r)?, r.eta);
    let dist = lhs_expr.pole_distance(s).min(rhs_expr.pole_distance(s));
    if dist < POLE_GUARD {
        return Err(Error::NearPole(format!("{s}"), dist));
    }
    let lhs = lhs_expr.eval(s)?;
    let rhs = rhs_expr.eval(s)?;
    Ok(FeSample { s, lhs, rhs, omega: omega(&r)?, constant: lhs / rhs })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeReport {
    pub twisted: bool,
    pub samples: Vec<FeSample>,
    /// Largest `|lhs − ω·rhs| / |lhs|` with the closed-form `ω`.
    pub max_rel_err: f64,
    /// Largest `| |c| − 1 |` and `|c⁴ − 1|` over the solved constants `c = lhs/rhs`.
    pub max_unit_err: f64,
    /// Largest `|c_k − c_0|`: the constant must not depend on `s`.
    pub constant_spread: f64,
    pub passed: bool,
}

/// Checks the functional equation at every point. Untwisted data must match the
/// closed-form `ω`; twisted data only needs a constant fourth root of unity.
pub fn fe_sweep(r: &ReprData, points: &[Complex64], tol: f64) -> Result<FeReport> {
    let samples = points.iter().map(|&s| fe_ratio_check(r, s)).collect::<Result<Vec<_>>>()?;
    let max_rel_err = samples.iter().map(FeSample::relative_error).fold(0.0, f64::max);
    let max_unit_err = samples
        .iter()
        .map(|x| (x.constant.norm() - 1.0).abs().max((x.constant.powi(4) - 1.0).norm()))
        .fold(0.0, f64::max);
    let constant_spread = samples
        .first()
        .map_or(0.0, |first| samples.iter().map(|x| (x.constant - first.constant).norm()).fold(0.0, f64::max));
    let twisted = r.eta == 1;
    let passed = if twisted { max_unit_err <= tol && constant_spread <= tol } else { max_rel_err <= tol };
    Ok(FeReport { twisted, samples, max_rel_err, max_unit_err, constant_spread, passed })
}

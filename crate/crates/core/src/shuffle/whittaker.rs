//! The open-cell Whittaker function `w_{λ,δ}` and its value on the shuffled matrix.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::block::build_b;
use super::identities::superdiag_sum_x;
use super::kappa::kappa2;
use super::vars::XVars;
use crate::algebra::{nhn_decompose, GenMatrix};
use crate::error::{Error, Result};
use crate::lfactors::EmbeddingParams;

/// `e(x) = exp(2πi x)`.
pub fn e(x: f64) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI * x).exp()
}

fn signed_power(x: f64, exponent: Complex64, parity: u8) -> Complex64 {
    let v = (exponent * x.abs().ln()).exp();
    if x < 0.0 && parity % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `e(Σ n_{j,j+1}) ∏_j |a_j|^{(m+1)/2 − j − λ_j} sgn(a_j)^{δ_j}` for `g = n · diag(a) · n₋`.
pub fn whittaker_eval(ep: &EmbeddingParams, g: &GenMatrix<f64>) -> Result<Complex64> {
    let m = g.rows();
    if ep.len() != m {
        return Err(Error::Shape(format!("{m}x{m} matrix but {} parameters", ep.len())));
    }
    let nhn = nhn_decompose(g).map_err(|_| Error::Domain("matrix lies outside the open cell".into()))?;
    let lambda = ep.lambda_c64();
    let mut v = e(nhn.superdiagonal_sum());
    for (j, a) in nhn.h.iter().enumerate() {
        let exponent = Complex64::new((m as f64 + 1.0) / 2.0 - (j + 1) as f64, 0.0) - lambda[j];
        v *= signed_power(*a, exponent, ep.delta[j]);
    }
    Ok(v)
}

/// The `2n × 2n` matrix `diag(B, 1)` at numeric x-coordinates.
pub fn shuffled_point(x: &XVars<f64>) -> Result<GenMatrix<f64>> {
    let b = build_b(&x.to_unfold()?)?;
    Ok(GenMatrix::block_diag(&[&b, &GenMatrix::identity(1)]))
}

/// Oracle path: NHN-decompose the assembled matrix and apply the open-cell formula.
pub fn shuffled_whittaker_oracle(x: &XVars<f64>, ep: &EmbeddingParams) -> Result<Complex64> {
    check_inputs(x, ep)?;
    whittaker_eval(ep, &shuffled_point(x)?)
}

/// Closed form `e(Σ x − Σ x_{i,2n−1}) κ₂ ∏ |x_{i,j}|^{−λ_i−λ_{j+1−i}+2n−j} sgn(x_{i,j})^{δ_i+δ_{j+1−i}}`.
pub fn shuffled_whittaker_closed(x: &XVars<f64>, ep: &EmbeddingParams) -> Result<Complex64> {
    check_inputs(x, ep)?;
    let n = x.n_half;
    let lambda = ep.lambda_c64();
    let mut v = e(superdiag_sum_x(x)) * kappa2(n, &ep.delta) as f64;
    for (&(i, j), &xv) in &x.x {
        let k = j + 1 - i;
        let exponent = Complex64::new((2 * n - j) as f64, 0.0) - lambda[i - 1] - lambda[k - 1];
        v *= signed_power(xv, exponent, ep.delta[i - 1] + ep.delta[k - 1]);
    }
    Ok(v)
}

fn check_inputs(x: &XVars<f64>, ep: &EmbeddingParams) -> Result<()> {
    x.check()?;
    if ep.len() != 2 * x.n_half {
        return Err(Error::Shape(format!("need {} parameters, got {}", 2 * x.n_half, ep.len())));
    }
    if x.x.values().any(|v| *v == 0.0 || !v.is_finite()) {
        return Err(Error::Domain("x-coordinates must be finite and nonzero".into()));
    }
    Ok(())
}

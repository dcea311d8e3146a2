//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_64, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Kronrod estimate and `|Kronrod − Gauss|` on `[a, b]`.
pub fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for k in 0..7 {
        let dx = h * XGK[k];
        let pair = f(c - dx) + f(c + dx);
        kronrod += pair * WGK[k];
        if k % 2 == 1 {
            gauss += pair * WG[k / 2];
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).norm())
}

/// Adaptive bisection until the summed error estimate is below `tol`, or below the
/// roundoff floor `64ε·Σ|piece|` when that is larger.
pub fn integrate<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<Complex64> {
    let mut pieces = vec![(a, b, gk15(f, a, b))];
    loop {
        let total_err: f64 = pieces.iter().map(|p| p.2 .1).sum();
        let floor = 64.0 * f64::EPSILON * pieces.iter().map(|p| p.2 .0.norm()).sum::<f64>();
        if total_err <= tol.max(floor) {
            return Ok(pieces.iter().map(|p| p.2 .0).sum());
        }
        if pieces.len() >= max_intervals {
            let est: Complex64 = pieces.iter().map(|p| p.2 .0).sum();
            return Err(Error::Tolerance(format!(
                "quadrature on [{a}, {b}] stalled at error {total_err:e}; estimate {est}"
            )));
        }
        let worst =
            pieces.iter().enumerate().max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1)).map(|(k, _)| k).unwrap_or(0);
        let (lo, hi, _) = pieces.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        pieces.push((lo, mid, gk15(f, lo, mid)));
        pieces.push((mid, hi, gk15(f, mid, hi)));
    }
}

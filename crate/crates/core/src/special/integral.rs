//! `G_δ(s)` as the oscillatory integral `∫ e(x) sgn(x)^δ |x|^{s−1} dx`, regularized
//! by a smooth cutoff and `N` integrations by parts.
//!
//! With `c_p(x) = e(x) + (−1)^p e(−x)` and `ψ` the cutoff, the integral splits as
//! `∫₀^∞ ψ c_δ x^{s−1} dx + (−1)^N (2πi)^{−N} ∫₀^∞ c_{δ+N} ((1−ψ) x^{s−1})^{(N)} dx`,
//! which converges for `0 < Re s < N`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quad::integrate;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutoffSpec {
    pub inner_radius: f64,
    pub outer_radius: f64,
    pub parts_count: u32,
}

impl Default for CutoffSpec {
    fn default() -> Self {
        CutoffSpec { inner_radius: 1.0, outer_radius: 2.0, parts_count: 2 }
    }
}

const TAIL_START: f64 = 40.0;
const TOL: f64 = 1e-12;

fn c_parity(p: u32, x: f64) -> Complex64 {
    let t = 2.0 * PI * x;
    if p.is_multiple_of(2) {
        Complex64::new(2.0 * t.cos(), 0.0)
    } else {
        Complex64::new(0.0, 2.0 * t.sin())
    }
}

/// Truncated Taylor series `Σ a_k ε^k` about a point.
#[derive(Clone, Debug)]
struct Jet(Vec<f64>);

impl Jet {
    fn recip(&self) -> Jet {
        let n = self.0.len();
        let mut r = vec![0.0; n];
        r[0] = 1.0 / self.0[0];
        for k in 1..n {
            let s: f64 = (1..=k).map(|i| self.0[i] * r[k - i]).sum();
            r[k] = -s * r[0];
        }
        Jet(r)
    }

    fn exp(&self) -> Jet {
        let n = self.0.len();
        let mut r = vec![0.0; n];
        r[0] = self.0[0].exp();
        for k in 1..n {
            r[k] = (1..=k).map(|i| i as f64 * self.0[i] * r[k - i]).sum::<f64>() / k as f64;
        }
        Jet(r)
    }

    fn add_scalar(mut self, c: f64) -> Jet {
        self.0[0] += c;
        self
    }

    fn scale(self, c: f64) -> Jet {
        Jet(self.0.into_iter().map(|a| a * c).collect())
    }

    fn sub(&self, o: &Jet) -> Jet {
        Jet(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

/// Derivatives `0..=order` of the smooth step `h(t)/(h(t)+h(1−t))`, `h(t) = e^{−1/t}`,
/// which is 0 for `t ≤ 0` and 1 for `t ≥ 1`.
fn step_derivatives(t: f64, order: usize) -> Vec<f64> {
    let mut out = vec![0.0; order + 1];
    if t <= 0.0 {
        return out;
    }
    if t >= 1.0 {
        out[0] = 1.0;
        return out;
    }
    let mut u = vec![0.0; order + 1];
    u[0] = t;
    if order > 0 {
        u[1] = 1.0;
    }
    let u = Jet(u);
    let one_minus_u = u.clone().scale(-1.0).add_scalar(1.0);
    let q = u.recip().sub(&one_minus_u.recip());
    if q.0[0] > 700.0 {
        return out;
    }
    if q.0[0] < -700.0 {
        out[0] = 1.0;
        return out;
    }
    let step = q.exp().add_scalar(1.0).recip();
    let mut fact = 1.0;
    for (k, a) in step.0.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        out[k] = a * fact;
    }
    out
}

/// `(x^{a})^{(k)} = a(a−1)⋯(a−k+1) x^{a−k}` for `k = 0..=order`.
fn power_derivatives(a: Complex64, x: f64, order: usize) -> Vec<Complex64> {
    let mut coef = Complex64::new(1.0, 0.0);
    (0..=order)
        .map(|k| {
            if k > 0 {
                coef *= a - (k - 1) as f64;
            }
            coef * (x.ln() * (a - k as f64)).exp()
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `∫₀^r c_p(x) x^{s−1} dx` by termwise integration of the power series.
fn series_head(p: u32, s: Complex64, r: f64) -> Complex64 {
    let w = 2.0 * PI;
    let mut total = Complex64::new(0.0, 0.0);
    let mut k = if p.is_multiple_of(2) { 0 } else { 1 };
    let mut coef = if p.is_multiple_of(2) { 2.0 } else { 2.0 * w };
    loop {
        let term = coef * (r.ln() * (s + k as f64)).exp() / (s + k as f64);
        total += term;
        if term.norm() < 1e-18 * total.norm().max(1e-300) && k > 10 {
            break;
        }
        coef *= -w * w / ((k + 1) * (k + 2)) as f64;
        k += 2;
        if k > 400 {
            break;
        }
    }
    if p.is_multiple_of(2) {
        total
    } else {
        total * Complex64::new(0.0, 1.0)
    }
}

/// `∫_X^∞ c_p(x) x^{b} dx` for `Re b < −1` by the asymptotic expansion of the incomplete gamma function.
fn asymptotic_tail(p: u32, b: Complex64, x0: f64) -> Complex64 {
    let one_sided = |omega: f64| {
        let iw = Complex64::new(0.0, omega);
        let mut term = -(iw * x0).exp() * (x0.ln() * b).exp() / iw;
        let mut total = term;
        for k in 0..60 {
            term *= -(b - k as f64) / (iw * x0);
            total += term;
            if term.norm() < 1e-18 * total.norm() {
                break;
            }
        }
        total
    };
    let sign = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    one_sided(2.0 * PI) + sign * one_sided(-2.0 * PI)
}

/// `G_δ(s)` from its integral definition.
pub fn g_delta_integral(delta: u8, s: Complex64, cutoff: &CutoffSpec) -> Result<Complex64> {
    let n = cutoff.parts_count as usize;
    let (r_in, r_out) = (cutoff.inner_radius, cutoff.outer_radius);
    if delta > 1 {
        return Err(Error::Domain(format!("parity must be 0 or 1, got {delta}")));
    }
    if !(r_in > 0.0 && r_in < r_out && r_out < TAIL_START) {
        return Err(Error::Domain(format!("need 0 < inner_radius < outer_radius < {TAIL_START}")));
    }
    if n == 0 || !(s.re > 0.0 && s.re < n as f64) {
        return Err(Error::Domain(format!("need 0 < Re s < N with N = {n} ≥ 1")));
    }
    let p = delta as u32;
    let width = r_out - r_in;
    let cutoff_fn = |x: f64| 1.0 - step_derivatives((x - r_in) / width, 0)[0];

    // Compact piece: ψ = 1 on [0, r_in], then the transition.
    let head = series_head(p, s, r_in);
    let transition =
        integrate(&|x: f64| c_parity(p, x) * cutoff_fn(x) * (x.ln() * (s - 1.0)).exp(), r_in, r_out, TOL, 200)?;

    // Differentiated piece on the transition, via Leibniz on (1 − ψ) x^{s−1}.
    let q = p + cutoff.parts_count;
    let nth = |x: f64| {
        let steps = step_derivatives((x - r_in) / width, n);
        let pows = power_derivatives(s - 1.0, x, n);
        (0..=n).map(|k| binomial(n, k) * steps[k] / width.powi(k as i32) * pows[n - k]).sum::<Complex64>()
    };
    let mut parts = integrate(&|x: f64| c_parity(q, x) * nth(x), r_in, r_out, TOL, 200)?;

    // Beyond r_out the function is (s−1)⋯(s−N) x^{s−1−N}.
    let falling: Complex64 = (1..=n).map(|k| s - k as f64).product();
    let b = s - 1.0 - n as f64;
    let mut a = r_out;
    while a < TAIL_START {
        let hi = (a + 1.0).min(TAIL_START);
        parts += falling * integrate(&|x: f64| c_parity(q, x) * (x.ln() * b).exp(), a, hi, TOL, 100)?;
        a = hi;
    }
    parts += falling * asymptotic_tail(q, b, TAIL_START);

    let scale = Complex64::new(0.0, 2.0 * PI).powi(-(n as i32)) * if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(head + transition + scale * parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::g_delta;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn step_is_smooth_and_monotone() {
        assert_eq!(step_derivatives(-0.1, 2), vec![0.0, 0.0, 0.0]);
        assert_eq!(step_derivatives(1.2, 2), vec![1.0, 0.0, 0.0]);
        let mid = step_derivatives(0.5, 3);
        assert!((mid[0] - 0.5).abs() < 1e-15);
        assert!(mid[1] > 0.0 && mid[2].abs() < 1e-12);
        let h = 1e-5;
        for t in [0.2, 0.37, 0.81] {
            let d = step_derivatives(t, 2);
            let fd = (step_derivatives(t + h, 0)[0] - step_derivatives(t - h, 0)[0]) / (2.0 * h);
            assert!((d[1] - fd).abs() < 1e-7);
            let fd2 = (step_derivatives(t + h, 1)[1] - step_derivatives(t - h, 1)[1]) / (2.0 * h);
            assert!((d[2] - fd2).abs() < 1e-6);
        }
    }

    #[test]
    fn anchors() {
        let two = CutoffSpec::default();
        assert!((g_delta_integral(0, c(0.5, 0.0), &two).unwrap() - 1.0).norm() < 1e-6);
        assert!((g_delta_integral(1, c(0.5, 0.0), &two).unwrap() - c(0.0, 1.0)).norm() < 1e-6);
        let three = CutoffSpec { parts_count: 3, ..two };
        let s = c(0.25, 0.5);
        assert!((g_delta_integral(0, s, &three).unwrap() - g_delta(0, s).unwrap()).norm() < 1e-6);
    }

    #[test]
    fn continuation_past_one() {
        let spec = CutoffSpec { inner_radius: 0.5, outer_radius: 3.0, parts_count: 3 };
        for s in [c(1.5, 0.3), c(2.4, -1.0)] {
            for d in 0..2 {
                let v = g_delta_integral(d, s, &spec).unwrap();
                assert!((v - g_delta(d, s).unwrap()).norm() < 1e-6, "δ={d} s={s}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let spec = CutoffSpec::default();
        assert!(g_delta_integral(0, c(2.5, 0.0), &spec).is_err());
        assert!(g_delta_integral(0, c(-0.1, 0.0), &spec).is_err());
        assert!(g_delta_integral(0, c(0.5, 0.0), &CutoffSpec { inner_radius: 2.0, outer_radius: 1.0, parts_count: 2 })
            .is_err());
    }
}

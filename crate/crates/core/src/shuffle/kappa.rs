//! Signs picked up by the unfolded integral.
//!
//! All parity vectors are indexed from one in the formulas, from zero in code.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KappaSigns {
    pub kappa1: i8,
    pub kappa1_prime: i8,
    pub kappa2: i8,
    pub kappa3: i8,
    pub kappa: i8,
}

impl KappaSigns {
    pub fn product_matches(&self) -> bool {
        self.kappa1_prime * self.kappa2 * self.kappa3 == self.kappa
    }
}

fn sign(e: usize) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn d(delta: &[u8], j: usize) -> usize {
    delta[j - 1] as usize
}

/// `κ₂ = (−1)^{δ₂+δ₄+⋯+δ_{2n−2}}`.
pub fn kappa2(n_half: usize, delta: &[u8]) -> i8 {
    sign((1..n_half).map(|j| d(delta, 2 * j)).sum())
}

/// `Σ δ_i ≡ ε + nη (mod 2)`.
pub fn parity_constraint_holds(n_half: usize, delta: &[u8], eps: u8, eta: u8) -> bool {
    let total: usize = delta.iter().map(|&x| x as usize).sum();
    (total + eps as usize + n_half * eta as usize).is_multiple_of(2)
}

/// κ₁, κ₁′, κ₂ from their definitions, κ₃ as the product of the signs `(−1)^{δ_i+δ_{2n−i}+η}`
/// contributed by the `e(−x_{i,2n−1})` integrals, and κ from its closed form.
pub fn kappa_signs(n_half: usize, delta: &[u8], eps: u8, eta: u8) -> Result<KappaSigns> {
    let n = n_half;
    if n == 0 || delta.len() != 2 * n {
        return Err(Error::Shape(format!("δ must have length {}", 2 * n)));
    }
    if delta.iter().chain([&eps, &eta]).any(|&x| x > 1) {
        return Err(Error::Domain("parities must be 0 or 1".into()));
    }
    if !parity_constraint_holds(n, delta, eps, eta) {
        return Err(Error::Domain("parity constraint Σδ ≡ ε + nη (mod 2) fails".into()));
    }
    let (eps, eta) = (eps as usize, eta as usize);
    let middle: usize = (2..n).map(|j| d(delta, j)).sum::<usize>() + d(delta, 2 * n) + eps;
    let kappa1 = sign(middle + eta * n * (n + 1) / 2);
    let kappa1_prime = sign(middle + n * eta);
    let kappa3 = sign((1..n).map(|i| d(delta, i) + d(delta, 2 * n - i) + eta).sum());
    let kappa = sign(
        (n + 1) * eta + (2..=n).map(|j| d(delta, j)).sum::<usize>() + (1..n).map(|j| d(delta, 2 * j)).sum::<usize>(),
    );
    Ok(KappaSigns { kappa1, kappa1_prime, kappa2: kappa2(n, delta), kappa3, kappa })
}

/// κ₃ in its simplified form `(−1)^{η+δ_n+δ_{2n}+ε}`.
pub fn kappa3_closed(n_half: usize, delta: &[u8], eps: u8, eta: u8) -> i8 {
    sign(eta as usize + d(delta, n_half) + d(delta, 2 * n_half) + eps as usize)
}

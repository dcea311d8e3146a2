use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, CRat, Rat};
use crate::error::{Error, Result};

/// Principal series parameters `(λ, δ)` of `GL(m, ℝ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingParams {
    pub lambda: Vec<CRat>,
    pub delta: Vec<u8>,
}

impl EmbeddingParams {
    pub fn new(lambda: Vec<CRat>, delta: Vec<u8>) -> Result<Self> {
        if lambda.len() != delta.len() || lambda.is_empty() {
            return Err(Error::Shape(format!("λ has length {} but δ has length {}", lambda.len(), delta.len())));
        }
        if delta.iter().any(|&d| d > 1) {
            return Err(Error::Domain("δ entries must be 0 or 1".into()));
        }
        Ok(EmbeddingParams { lambda, delta })
    }

    pub fn zero(m: usize) -> Self {
        EmbeddingParams { lambda: vec![CRat::zero(); m], delta: vec![0; m] }
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// `λ_i` for one-based `i`.
    pub fn lam(&self, i: usize) -> &CRat {
        &self.lambda[i - 1]
    }

    /// `δ_i` for one-based `i`.
    pub fn del(&self, i: usize) -> u8 {
        self.delta[i - 1]
    }

    pub fn lambda_c64(&self) -> Vec<Complex64> {
        self.lambda.iter().map(CRat::to_c64).collect()
    }

    /// `λ̃ = (−λ_m, …, −λ₁)`, `δ̃ = (δ_m, …, δ₁)`.
    pub fn contragredient(&self) -> Self {
        EmbeddingParams {
            lambda: self.lambda.iter().rev().map(|l| -l).collect(),
            delta: self.delta.iter().rev().copied().collect(),
        }
    }

    /// `Σ λ_i`, which vanishes for trivial central character.
    pub fn lambda_sum(&self) -> CRat {
        self.lambda.iter().fold(CRat::zero(), |acc, l| &acc + l)
    }
}

/// `ρ = ((m−1)/2, (m−3)/2, …, (1−m)/2)`.
pub fn rho(m: usize) -> Vec<Rat> {
    (0..m).map(|j| rat(m as i64 - 1 - 2 * j as i64, 2)).collect()
}

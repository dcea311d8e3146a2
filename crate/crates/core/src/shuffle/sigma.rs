use crate::algebra::{Field, GenMatrix, Rat};
use crate::error::{Error, Result};

/// The card-shuffle permutation of `{1, …, 2n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShuffleSigma {
    pub n_half: usize,
    /// `permutation[k - 1]` is the image of basis index `k` (both one-based).
    pub permutation: Vec<usize>,
    pub matrix: GenMatrix<Rat>,
}

/// Image of the one-based basis index `k` under σ for `GL(2n)`.
pub fn sigma_image(n_half: usize, k: usize) -> usize {
    let m = 2 * n_half - 1;
    if k == 2 * n_half {
        k
    } else {
        (2 * k - 2) % m + 1
    }
}

/// Permutation matrix sending `e_k` to `e_{σ(k)}`.
pub fn sigma_matrix<T: Field>(n_half: usize) -> GenMatrix<T> {
    let size = 2 * n_half;
    GenMatrix::from_fn(size, size, |i, j| if sigma_image(n_half, j + 1) == i + 1 { T::one() } else { T::zero() })
}

pub fn sigma(n_half: usize) -> Result<ShuffleSigma> {
    if n_half == 0 {
        return Err(Error::Domain("n_half must be at least 1".into()));
    }
    Ok(ShuffleSigma {
        n_half,
        permutation: (1..=2 * n_half).map(|k| sigma_image(n_half, k)).collect(),
        matrix: sigma_matrix(n_half),
    })
}

/// Sign of σ from the four-periodic rule.
pub fn sigma_sign_rule(n_half: usize) -> i32 {
    match n_half % 4 {
        0 | 1 => 1,
        _ => -1,
    }
}

/// Sign of a permutation from its cycle decomposition.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k] - 1;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

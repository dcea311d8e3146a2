//! The shuffled block matrix `A` and its tilde modification `B`.
//!
//! Row and column labels in comments are one-based; code indices are zero-based.

use super::sigma::sigma_image;
use super::vars::{y_coord, Coord, UnfoldVars};
use crate::algebra::{Field, GenMatrix};
use crate::error::{Error, Result};

/// The `2n × 2n` product `M = [[C f₁, Z f₂], [0, C f₂]]` before shuffling.
pub fn unshuffled_matrix<T: Field>(v: &UnfoldVars<T>) -> Result<GenMatrix<T>> {
    v.check()?;
    let n = v.n_half;
    let mut c = GenMatrix::zeros(n, n);
    c.set(n - 1, n - 1, T::one());
    let mut z = GenMatrix::zeros(n, n);
    for (&(i, j), val) in &v.c {
        c.set(i - 1, j - 1, val.clone());
    }
    for (&(i, j), val) in &v.z {
        z.set(i, j - 1, val.clone());
    }
    let f1 = GenMatrix::from_fn(n, n, |r, s| if r == s || s == n - 1 { T::one() } else { T::zero() });
    let f2 = GenMatrix::from_fn(n, n, |r, s| {
        let hit = if r == n - 1 || s == n - 1 { r == s } else { r + s == n - 2 };
        if hit {
            T::one()
        } else {
            T::zero()
        }
    });
    let cf1 = c.mul(&f1)?;
    let zf2 = z.mul(&f2)?;
    let cf2 = c.mul(&f2)?;
    Ok(GenMatrix::from_fn(2 * n, 2 * n, |r, s| match (r < n, s < n) {
        (true, true) => cf1.get(r, s).clone(),
        (true, false) => zf2.get(r, s - n).clone(),
        (false, true) => T::zero(),
        (false, false) => cf2.get(r - n, s - n).clone(),
    }))
}

/// `σ · M`: row `σ(k)` of the result is row `k` of `M`.
pub fn shuffled_matrix<T: Field>(v: &UnfoldVars<T>) -> Result<GenMatrix<T>> {
    let m = unshuffled_matrix(v)?;
    let size = m.rows();
    let mut out = GenMatrix::zeros(size, size);
    for k in 1..=size {
        let target = sigma_image(v.n_half, k) - 1;
        for s in 0..size {
            out.set(target, s, m.get(k - 1, s).clone());
        }
    }
    Ok(out)
}

/// The upper `(2n−1) × (2n−1)` block `A` of `σ M`.
pub fn build_block_a<T: Field>(v: &UnfoldVars<T>) -> Result<GenMatrix<T>> {
    if v.n_half < 2 {
        return Err(Error::Domain("n_half must be at least 2".into()));
    }
    let g = shuffled_matrix(v)?;
    let m = g.rows() - 1;
    Ok(g.block(0, m, 0, m))
}

/// The square block attached to `y_{k,ℓ}`: rows `ℓ..2n−1`, columns `ℓ+1−k..2n−k`.
/// `y_{k,ℓ}` sits in its top-right corner.
pub fn y_block<T: Field>(a: &GenMatrix<T>, n_half: usize, k: usize, l: usize) -> GenMatrix<T> {
    let m = 2 * n_half - 1;
    a.block(l - 1, m, l - k, 2 * n_half - k)
}

/// Positions `(k, ℓ)` whose variable gets a tilde, in solve order.
pub fn tilde_positions(n_half: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for l in (1..2 * n_half - 1).rev() {
        for k in (1..n_half).rev() {
            if 2 * k < l {
                out.push((k, l));
            }
        }
    }
    out
}

fn sign(size: usize) -> i64 {
    if size % 2 == 1 {
        1
    } else {
        -1
    }
}

/// The tilde variables: every `ỹ_{k,ℓ}` with `2k < ℓ < 2n−1` is fixed by
/// `det B_{(k,ℓ)} = (−1)^{size−1} y_{k,ℓ} det B_{(k+1,ℓ+1)}`; the rest are unchanged.
///
/// Rows are solved from the bottom up and each row from right to left, so
/// every block only involves entries that are already final.
pub fn tilde_vars<T: Field>(v: &UnfoldVars<T>) -> Result<UnfoldVars<T>> {
    let n = v.n_half;
    let mut t = v.clone();
    for (k, l) in tilde_positions(n) {
        let coord = y_coord(k, l);
        t.set(coord, T::zero());
        let a = build_block_a(&t)?;
        let block = y_block(&a, n, k, l);
        let size = block.rows();
        let det0 = block.det()?;
        let inner = y_block(&a, n, k + 1, l + 1).det()?;
        if inner.is_zero() {
            return Err(Error::Degenerate(format!("vanishing cofactor while solving for the tilde of y_{{{k},{l}}}")));
        }
        let cof = inner.mul(&T::from_i64(sign(size)));
        t.set(coord, v.get(coord).sub(&det0.div(&cof)));
    }
    Ok(t)
}

/// `B`: the block matrix `A` evaluated at the tilde variables.
pub fn build_b<T: Field>(v: &UnfoldVars<T>) -> Result<GenMatrix<T>> {
    build_block_a(&tilde_vars(v)?)
}

/// Residuals `det B_{(k,ℓ)} − (−1)^{size−1} y_{k,ℓ} det B_{(k+1,ℓ+1)}` for every tilde position.
pub fn tilde_residuals<T: Field>(v: &UnfoldVars<T>, b: &GenMatrix<T>) -> Result<Vec<((usize, usize), T)>> {
    let n = v.n_half;
    let mut out = Vec::new();
    for (k, l) in tilde_positions(n) {
        let block = y_block(b, n, k, l);
        let size = block.rows();
        let rhs = y_block(b, n, k + 1, l + 1).det()?.mul(v.y(k, l)).mul(&T::from_i64(sign(size)));
        out.push(((k, l), block.det()?.sub(&rhs)));
    }
    Ok(out)
}

pub fn tilde_relations_hold<T: Field>(v: &UnfoldVars<T>, b: &GenMatrix<T>) -> Result<bool> {
    Ok(tilde_residuals(v, b)?.iter().all(|(_, r)| r.is_zero()))
}

/// Entries that the tilde procedure leaves alone: every `c_{j,j}` and every `z_{n−1,j}`.
pub fn is_fixed_coord(n_half: usize, coord: Coord) -> bool {
    match coord {
        Coord::C(i, j) => i == j,
        Coord::Z(i, _) => i == n_half - 1,
    }
}

/// The slicing lemma for a square matrix: the unique `B = A + R` with `R`
/// supported on `p + q > n`, `p < n`, such that for every `i < q` the block of
/// `B` on rows `n−q+i..n`, columns `i..q` has the determinant of the
/// anti-diagonal part of the same block of `A`.
pub fn agreeing_matrix<T: Field>(a: &GenMatrix<T>) -> Result<GenMatrix<T>> {
    if !a.is_square() {
        return Err(Error::Shape("agreeing_matrix needs a square matrix".into()));
    }
    let n = a.rows();
    let mut b = a.clone();
    for p in (1..n).rev() {
        for q in (n - p + 1)..=n {
            let i = p + q - n;
            let rows: Vec<usize> = (p - 1..n).collect();
            let cols: Vec<usize> = (i - 1..q).collect();
            let size = rows.len();
            let target = GenMatrix::from_fn(size, size, |r, s| {
                if r + s + 1 == size {
                    a.get(rows[r], cols[s]).clone()
                } else {
                    T::zero()
                }
            });
            let want = target.det()?;
            b.set(p - 1, q - 1, T::zero());
            let det0 = b.submatrix(&rows, &cols).det()?;
            let inner = b.submatrix(&rows[1..], &cols[..size - 1]).det()?;
            if inner.is_zero() {
                return Err(Error::Degenerate(format!("vanishing cofactor at entry ({p},{q})")));
            }
            let cof = inner.mul(&T::from_i64(sign(size)));
            b.set(p - 1, q - 1, want.sub(&det0).div(&cof));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{generic_matrix, RatFunc};
    use std::collections::HashMap;

    #[test]
    fn block_a_for_n2() {
        let vars = UnfoldVars::symbolic(2, "ba");
        let a = build_block_a(&vars).unwrap();
        let c = vars.c[&(1, 1)].clone();
        let z = vars.z[&(1, 1)].clone();
        let o = RatFunc::zero();
        let want = GenMatrix::from_rows(vec![
            vec![c.clone(), c.clone(), o.clone()],
            vec![o.clone(), o.clone(), c],
            vec![o, RatFunc::one(), z],
        ])
        .unwrap();
        assert_eq!(a, want);
    }

    #[test]
    fn block_a_placement_n3() {
        let vars = UnfoldVars::symbolic(3, "bb");
        let a = build_block_a(&vars).unwrap();
        assert_eq!(a.get(4, 3), &vars.z[&(2, 2)]);
        assert_eq!(a.get(0, 2), &vars.c_row_sum(1));
        assert_eq!(a.get(2, 2), &vars.c_row_sum(2));
        for (i, j) in super::super::vars::x_indices(3) {
            assert_eq!(a.get(j - 1, 2 * 3 - i - 1), vars.y(i, j), "y_{{{i},{j}}}");
        }
    }

    #[test]
    fn full_matrix_is_block_diagonal_with_one() {
        let vars = UnfoldVars::symbolic(3, "bc");
        let g = shuffled_matrix(&vars).unwrap();
        for k in 0..5 {
            assert!(Field::is_zero(g.get(5, k)) && Field::is_zero(g.get(k, 5)));
        }
        assert!(g.get(5, 5).is_one());
    }

    #[test]
    fn tilde_relations_n3_symbolic() {
        let vars = UnfoldVars::symbolic(3, "bd");
        let t = tilde_vars(&vars).unwrap();
        let b = build_block_a(&t).unwrap();
        assert!(tilde_relations_hold(&vars, &b).unwrap());
        for (k, val) in &vars.c {
            if k.0 == k.1 {
                assert_eq!(&t.c[k], val);
            }
        }
        for j in 1..3 {
            assert_eq!(t.z[&(2, j)], vars.z[&(2, j)]);
        }
        assert_ne!(t.z[&(1, 1)], vars.z[&(1, 1)]);
    }

    #[test]
    fn z_shifts_vanish_without_z() {
        let vars = UnfoldVars::symbolic(3, "be");
        let t = tilde_vars(&vars).unwrap();
        let zero_z: HashMap<usize, RatFunc> =
            vars.z.values().map(|z| (*z.numer().vars().first().unwrap(), RatFunc::zero())).collect();
        for (k, z) in &vars.z {
            let shift = t.z[k].sub(z);
            assert!(shift.substitute(&zero_z).unwrap().is_zero(), "z̃{k:?}");
        }
    }

    #[test]
    fn slicing_prototype_two_by_two() {
        let g = generic_matrix(2, "sl");
        let b = agreeing_matrix(&g).unwrap();
        let want = g.get(0, 1).add(&g.get(0, 0).mul(g.get(1, 1)).div(g.get(1, 0)));
        assert_eq!(b.get(0, 1), &want);
        assert_eq!(b.get(0, 0), g.get(0, 0));
        assert_eq!(b.get(1, 0), g.get(1, 0));
        assert_eq!(b.get(1, 1), g.get(1, 1));
    }

    #[test]
    fn slicing_lemma_three_by_three() {
        let g = generic_matrix(3, "sm");
        let b = agreeing_matrix(&g).unwrap();
        for p in 1..3usize {
            for q in (3 - p + 1)..=3 {
                let i = p + q - 3;
                let rows: Vec<usize> = (p - 1..3).collect();
                let cols: Vec<usize> = (i - 1..q).collect();
                let size = rows.len();
                let anti = GenMatrix::from_fn(size, size, |r, s| {
                    if r + s + 1 == size {
                        g.get(rows[r], cols[s]).clone()
                    } else {
                        RatFunc::zero()
                    }
                });
                assert_eq!(b.submatrix(&rows, &cols).det().unwrap(), anti.det().unwrap());
            }
        }
        for (p, q) in [(1, 1), (1, 2), (2, 1), (3, 1), (3, 2), (3, 3)] {
            if p + q <= 3 || p == 3 {
                assert_eq!(b.get(p - 1, q - 1), g.get(p - 1, q - 1));
            }
        }
    }
}

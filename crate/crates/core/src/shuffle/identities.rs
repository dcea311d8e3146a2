//! Closed forms attached to `B`: the superdiagonal sum, the alternating-sum
//! lemma and the recursive lower-triangular factor.

use super::block::{build_b, tilde_vars};
use super::vars::{UnfoldVars, XVars};
use crate::algebra::{nhn_decompose, Field, GenMatrix};
use crate::error::{Error, Result};

/// Superdiagonal sum of the unipotent upper factor of `B`, read off its NHN decomposition.
pub fn superdiag_sum_oracle<T: Field>(v: &UnfoldVars<T>) -> Result<T> {
    let b = build_b(v)?;
    Ok(nhn_decompose(&b)?.superdiagonal_sum())
}

/// `Σ c_{i,j}/z_{i,j} + Σ_{i<n−1} z_{i,j}/c_{i+1,j} − Σ_j z_{n−1,j}`.
pub fn superdiag_sum<T: Field>(v: &UnfoldVars<T>) -> Result<T> {
    v.check()?;
    let n = v.n_half;
    let mut total = T::zero();
    for (&(i, j), c) in &v.c {
        let z = &v.z[&(i, j)];
        if z.is_zero() {
            return Err(Error::Degenerate(format!("z_{{{i},{j}}} vanishes")));
        }
        total = total.add(&c.div(z));
    }
    for (&(i, j), z) in &v.z {
        if i < n - 1 {
            let c = &v.c[&(i + 1, j)];
            if c.is_zero() {
                return Err(Error::Degenerate(format!("c_{{{},{j}}} vanishes", i + 1)));
            }
            total = total.add(&z.div(c));
        } else {
            total = total.sub(z);
        }
    }
    Ok(total)
}

/// The same sum in x-coordinates: `Σ_{2i ≤ j ≤ 2n−2} x_{i,j} − Σ_{i<n} x_{i,2n−1}`.
pub fn superdiag_sum_x<T: Field>(x: &XVars<T>) -> T {
    let last = 2 * x.n_half - 1;
    x.x.iter().fold(T::zero(), |acc, (&(_, j), v)| if j == last { acc.sub(v) } else { acc.add(v) })
}

/// Both sides of `Σ_j s_j = Σ_j z_{n−1,j}`, where
/// `s_j = (−1)^{1+(n−j)(n−j+1)/2} c̃_j e_j / ∏_{q=j}^{n−1} c_{q,q}` and `e_j` is
/// the determinant with rows `c̃_{r,·}` (`j < r < n`) and `z̃_{n−1,·}`, columns `n−1` down to `j`.
pub fn altsum_check<T: Field>(v: &UnfoldVars<T>) -> Result<(T, T)> {
    let n = v.n_half;
    let t = tilde_vars(v)?;
    let mut lhs = T::zero();
    for j in 1..n {
        let cols: Vec<usize> = (j..n).rev().collect();
        let mut rows: Vec<Vec<T>> = ((j + 1)..n)
            .map(|r| cols.iter().map(|&q| if q <= r { t.c[&(r, q)].clone() } else { T::zero() }).collect())
            .collect();
        rows.push(cols.iter().map(|&q| t.z[&(n - 1, q)].clone()).collect());
        let e = GenMatrix::from_rows(rows)?.det()?;
        let mut den = T::one();
        for q in j..n {
            den = den.mul(&v.c[&(q, q)]);
        }
        if den.is_zero() {
            return Err(Error::Degenerate("a diagonal c_{q,q} vanishes".into()));
        }
        let k = n - j;
        let sign = if (1 + k * (k + 1) / 2).is_multiple_of(2) { T::one() } else { T::one().neg() };
        lhs = lhs.add(&sign.mul(&t.c_row_sum(j)).mul(&e).div(&den));
    }
    let rhs = (1..n).fold(T::zero(), |acc, j| acc.add(&v.z[&(n - 1, j)]));
    Ok((lhs, rhs))
}

fn unit_lower<T: Field>(m: usize, minus_last_row: bool) -> GenMatrix<T> {
    GenMatrix::from_fn(m, m, |a, b| {
        if minus_last_row && a + 1 == m {
            T::one().neg()
        } else if b <= a {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// Lower factor of `B` in x-coordinates via
/// `b_{−,n+1} = diag(b_{−,n}, I₂) m₁ m₂ m₃ m₄`, starting from `b_{−,1} = (1)`.
pub fn lower_factor_recursive<T: Field>(x: &XVars<T>) -> Result<GenMatrix<T>> {
    x.check()?;
    if x.x.values().any(|v| v.is_zero()) {
        return Err(Error::Domain("x-coordinates must be nonzero".into()));
    }
    let xv = |i: usize, j: usize| x.x[&(i, j)].clone();
    let mut b = GenMatrix::identity(1);
    for n in 1..x.n_half {
        let id1: GenMatrix<T> = GenMatrix::identity(1);
        let d = GenMatrix::block_diag(&[&b, &GenMatrix::identity(2)]);
        let m1 = GenMatrix::block_diag(&[&unit_lower(n, false), &unit_lower(n, true), &id1]);
        let mut diag2: Vec<T> = (1..=n).map(|i| xv(i, 2 * n)).collect();
        diag2.extend((1..=n).rev().map(|i| xv(i, 2 * n)));
        diag2.push(T::one());
        let m3 = GenMatrix::block_diag(&[&unit_lower(n, false), &unit_lower(n + 1, false)]);
        let mut diag4: Vec<T> = (1..=n).map(|i| xv(i, 2 * n + 1)).collect();
        diag4.push(T::one());
        diag4.extend((1..=n).rev().map(|i| xv(i, 2 * n + 1)));
        b = d.mul(&m1)?.mul(&GenMatrix::diagonal(&diag2))?.mul(&m3)?.mul(&GenMatrix::diagonal(&diag4))?;
    }
    Ok(b)
}

/// Lower factor `u⁻¹ B` of `B = u · b₋` with `u` unipotent upper triangular, from elimination.
pub fn lower_factor_oracle<T: Field>(v: &UnfoldVars<T>) -> Result<GenMatrix<T>> {
    let nhn = nhn_decompose(&build_b(v)?)?;
    GenMatrix::diagonal(&nhn.h).mul(&nhn.n_minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatFunc;

    #[test]
    fn superdiag_n2() {
        let v = UnfoldVars::symbolic(2, "sa");
        let c = &v.c[&(1, 1)];
        let z = &v.z[&(1, 1)];
        let want = c.div(z).sub(z);
        assert_eq!(superdiag_sum(&v).unwrap(), want);
        assert_eq!(superdiag_sum_oracle(&v).unwrap(), want);
    }

    #[test]
    fn superdiag_x_form_n3() {
        let x = XVars::symbolic(3, "sb");
        let v = x.to_unfold().unwrap();
        assert_eq!(superdiag_sum(&v).unwrap(), superdiag_sum_x(&x));
    }

    #[test]
    fn altsum_n2_is_z11() {
        let v = UnfoldVars::symbolic(2, "sc");
        let (l, r) = altsum_check(&v).unwrap();
        assert_eq!(l, r);
        assert_eq!(r, v.z[&(1, 1)]);
    }

    #[test]
    fn recursion_base_and_n2() {
        let x1: XVars<RatFunc> = XVars { n_half: 1, x: Default::default() };
        assert_eq!(lower_factor_recursive(&x1).unwrap(), GenMatrix::identity(1));
        let x = XVars::symbolic(2, "sd");
        let rec = lower_factor_recursive(&x).unwrap();
        assert_eq!(rec, lower_factor_oracle(&x.to_unfold().unwrap()).unwrap());
        assert!(rec.is_lower_triangular());
    }
}

//! Upper-diagonal-lower factorizations of square matrices.
//!
//! Indices in this module are zero-based; `d[k]` is the determinant of the
//! trailing block `g[k.., k..]` and `d[n] = 1`.

use super::field::Field;
use super::matrix::GenMatrix;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Factors with `g = b_plus · a⁻¹ · b_minus`.
#[derive(Clone, Debug, PartialEq)]
pub struct UdlFactors<T> {
    pub b_plus: GenMatrix<T>,
    pub a: GenMatrix<T>,
    pub b_minus: GenMatrix<T>,
}

/// The unique decomposition `g = n · h · n_minus` with unipotent triangular outer factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Nhn<T> {
    pub n: GenMatrix<T>,
    pub h: Vec<T>,
    pub n_minus: GenMatrix<T>,
}

impl<T: Field> UdlFactors<T> {
    pub fn reconstruct(&self) -> Result<GenMatrix<T>> {
        let k = self.a.rows();
        let mut scaled = self.b_plus.clone();
        for j in 0..k {
            let aj = self.a.get(j, j).clone();
            if aj.is_zero() {
                return Err(Error::Degenerate("zero diagonal entry in a".into()));
            }
            for i in 0..k {
                let v = scaled.get(i, j).div(&aj);
                scaled.set(i, j, v);
            }
        }
        scaled.mul(&self.b_minus)
    }

    /// Normalizes the outer factors to be unipotent.
    pub fn to_nhn(&self) -> Result<Nhn<T>> {
        let k = self.a.rows();
        let p: Vec<T> = (0..k).map(|i| self.b_plus.get(i, i).clone()).collect();
        let q: Vec<T> = (0..k).map(|i| self.b_minus.get(i, i).clone()).collect();
        if p.iter().chain(&q).any(|x| x.is_zero()) {
            return Err(Error::Degenerate("triangular factor has a zero diagonal entry".into()));
        }
        let n = GenMatrix::from_fn(k, k, |i, j| self.b_plus.get(i, j).div(&p[j]));
        let n_minus = GenMatrix::from_fn(k, k, |i, j| self.b_minus.get(i, j).div(&q[i]));
        let h = (0..k).map(|i| p[i].div(self.a.get(i, i)).mul(&q[i])).collect();
        Ok(Nhn { n, h, n_minus })
    }
}

impl<T: Field> Nhn<T> {
    pub fn reconstruct(&self) -> Result<GenMatrix<T>> {
        self.n.mul(&GenMatrix::diagonal(&self.h))?.mul(&self.n_minus)
    }

    /// Sum of the entries just above the diagonal of `n`.
    pub fn superdiagonal_sum(&self) -> T {
        let k = self.h.len();
        (0..k.saturating_sub(1)).fold(T::zero(), |acc, i| acc.add(self.n.get(i, i + 1)))
    }
}

fn require_square<T: Field>(g: &GenMatrix<T>) -> Result<usize> {
    if !g.is_square() || g.rows() == 0 {
        return Err(Error::Shape(format!("expected a nonempty square matrix, got {}x{}", g.rows(), g.cols())));
    }
    Ok(g.rows())
}

/// Trailing principal minors `d[0..=n]` with `d[n] = 1`.
pub fn trailing_minors<T: Field>(g: &GenMatrix<T>) -> Result<Vec<T>> {
    let n = require_square(g)?;
    let mut d = Vec::with_capacity(n + 1);
    for k in 0..n {
        d.push(g.block(k, n, k, n).det()?);
    }
    d.push(T::one());
    Ok(d)
}

fn nonvanishing<T: Field>(d: &[T]) -> Result<()> {
    match d.iter().position(|x| x.is_zero()) {
        Some(k) => Err(Error::Degenerate(format!("trailing minor d_{} vanishes", k + 1))),
        None => Ok(()),
    }
}

/// Factorization whose entries are the minors given by the explicit formulas.
pub fn udl_explicit<T: Field>(g: &GenMatrix<T>) -> Result<UdlFactors<T>> {
    let n = require_square(g)?;
    let d = trailing_minors(g)?;
    nonvanishing(&d)?;
    let a = GenMatrix::diagonal(&(0..n).map(|i| d[i + 1].mul(&d[i])).collect::<Vec<_>>());
    let mut b_plus = GenMatrix::zeros(n, n);
    let mut b_minus = GenMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let rows: Vec<usize> = std::iter::once(i).chain(j + 1..n).collect();
            let cols: Vec<usize> = (j..n).collect();
            b_plus.set(i, j, g.submatrix(&rows, &cols).det()?);
        }
    }
    for i in 0..n {
        for j in 0..=i {
            let rows: Vec<usize> = (i..n).collect();
            let cols: Vec<usize> = std::iter::once(j).chain(i + 1..n).collect();
            b_minus.set(i, j, g.submatrix(&rows, &cols).det()?);
        }
    }
    Ok(UdlFactors { b_plus, a, b_minus })
}

/// NHN decomposition by row elimination from the bottom-right corner.
pub fn nhn_decompose<T: Field>(g: &GenMatrix<T>) -> Result<Nhn<T>> {
    let n = require_square(g)?;
    let mut l = g.clone();
    let mut upper = GenMatrix::identity(n);
    for k in (0..n).rev() {
        let piv = l.get(k, k).clone();
        if piv.is_zero() {
            return Err(Error::Degenerate(format!("trailing minor d_{} vanishes", k + 1)));
        }
        for i in 0..k {
            let lik = l.get(i, k);
            if lik.is_zero() {
                continue;
            }
            let f = lik.div(&piv);
            for j in 0..=k {
                let v = l.get(i, j).sub(&f.mul(l.get(k, j)));
                l.set(i, j, v);
            }
            upper.set(i, k, f);
        }
    }
    let h: Vec<T> = (0..n).map(|i| l.get(i, i).clone()).collect();
    let n_minus = GenMatrix::from_fn(n, n, |i, j| if j <= i { l.get(i, j).div(&h[i]) } else { T::zero() });
    Ok(Nhn { n: upper, h, n_minus })
}

/// Independent factorization by Gaussian elimination: unipotent upper factor and a lower factor.
pub fn udl_oracle<T: Field>(g: &GenMatrix<T>) -> Result<UdlFactors<T>> {
    let n = require_square(g)?;
    let mut l = g.clone();
    let mut inv_upper: GenMatrix<T> = GenMatrix::identity(n);
    for k in (0..n).rev() {
        let piv = l.get(k, k).clone();
        if piv.is_zero() {
            return Err(Error::Degenerate(format!("trailing minor d_{} vanishes", k + 1)));
        }
        for i in 0..k {
            let f = l.get(i, k).div(&piv);
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = l.get(i, j).sub(&f.mul(l.get(k, j)));
                l.set(i, j, v);
                let w = inv_upper.get(i, j).sub(&f.mul(inv_upper.get(k, j)));
                inv_upper.set(i, j, w);
            }
        }
    }
    Ok(UdlFactors { b_plus: inv_upper.inverse()?, a: GenMatrix::identity(n), b_minus: l })
}

/// Diagonal of the NHN middle factor as ratios of consecutive trailing minors.
pub fn corollary_h<T: Field>(g: &GenMatrix<T>) -> Result<Vec<T>> {
    let n = require_square(g)?;
    let d = trailing_minors(g)?;
    nonvanishing(&d)?;
    Ok((0..n).map(|i| d[i].div(&d[i + 1])).collect())
}

/// Superdiagonal of the unipotent upper factor as ratios of minors.
pub fn corollary_superdiagonal<T: Field>(g: &GenMatrix<T>) -> Result<Vec<T>> {
    let n = require_square(g)?;
    let d = trailing_minors(g)?;
    nonvanishing(&d)?;
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let rows: Vec<usize> = std::iter::once(i).chain(i + 2..n).collect();
        let cols: Vec<usize> = (i + 1..n).collect();
        out.push(g.submatrix(&rows, &cols).det()?.div(&d[i + 1]));
    }
    Ok(out)
}

/// The `n × n` matrix of independent indeterminates `{prefix}{i}{j}` (one-based).
pub fn generic_matrix(n: usize, prefix: &str) -> GenMatrix<RatFunc> {
    let sep = if n > 9 { "_" } else { "" };
    let names: Vec<String> = (0..n * n).map(|k| format!("{prefix}{}{sep}{}", k / n + 1, k % n + 1)).collect();
    super::poly::declare_vars(&names);
    GenMatrix::from_fn(n, n, |i, j| RatFunc::var(&names[i * n + j]))
}

use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over any [`Field`].
#[derive(Clone, PartialEq, Debug)]
pub struct GenMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> GenMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GenMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GenMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(GenMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { T::zero() })
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[&GenMatrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> GenMatrix<U> {
        GenMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Field>(&self, f: impl Fn(&T) -> Result<U>) -> Result<GenMatrix<U>> {
        Ok(GenMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Contiguous block `rows r0..r1`, `cols c0..c1` (half-open, zero-based).
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape("subtraction of different shapes".into()));
        }
        Ok(GenMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_upper_triangular() && self.is_lower_triangular()
    }

    pub fn is_unipotent(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i).is_one())
    }

    /// Determinant by cofactor expansion for size up to four, fraction-free elimination above.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of {}x{} matrix", self.rows, self.cols)));
        }
        Ok(if self.rows <= 4 { self.det_cofactor() } else { self.det_bareiss() })
    }

    fn det_cofactor(&self) -> T {
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0).mul(self.get(1, 1)).sub(&self.get(0, 1).mul(self.get(1, 0))),
            _ => {
                let mut acc = T::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let rows: Vec<usize> = (1..n).collect();
                    let minor = self.submatrix(&rows, &cols).det_cofactor();
                    let t = a.mul(&minor);
                    acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
                acc
            }
        }
    }

    fn det_bareiss(&self) -> T {
        let n = self.rows;
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.data.swap(k * n + j, i * n + j);
                        }
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let v = m.get(i, j).mul(&pivot).sub(&lead.mul(m.get(k, j))).div(&prev);
                    m.set(i, j, v);
                }
                m.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p =
                (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or_else(|| Error::Degenerate("singular matrix".into()))?;
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                    inv.data.swap(k * n + j, p * n + j);
                }
            }
            let piv = a.get(k, k).clone();
            for j in 0..n {
                a.set(k, j, a.get(k, j).div(&piv));
                inv.set(k, j, inv.get(k, j).div(&piv));
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j).sub(&f.mul(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).sub(&f.mul(inv.get(k, j))));
                }
            }
        }
        Ok(inv)
    }
}

impl<T: Field + fmt::Display> fmt::Display for GenMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat_int, Rat};

    fn m(rows: &[&[i64]]) -> GenMatrix<Rat> {
        GenMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn cofactor_and_bareiss_agree() {
        let a = m(&[&[2, 0, 1, 3, 1], &[1, 1, 0, 0, 2], &[0, 4, 1, 1, 1], &[5, 0, 0, 1, 0], &[1, 2, 3, 4, 5]]);
        assert_eq!(a.det_bareiss(), a.det_cofactor());
        let z = m(&[&[0, 1, 2, 0, 0], &[0, 3, 4, 1, 0], &[1, 0, 0, 0, 1], &[0, 0, 1, 1, 1], &[0, 2, 0, 0, 1]]);
        assert_eq!(z.det_bareiss(), z.det_cofactor());
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[0, 2, 1], &[1, 1, 0], &[3, 0, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), GenMatrix::identity(3));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn shape_errors() {
        let a = m(&[&[1, 2, 3]]);
        assert!(a.det().is_err());
        assert!(a.mul(&a).is_err());
    }
}

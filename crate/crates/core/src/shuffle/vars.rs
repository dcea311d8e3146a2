//! Coordinates on the unfolded integration domain.
//!
//! `c_{i,j}` and `z_{i,j}` are indexed by `1 ≤ j ≤ i < n`. The variable at
//! position `(j, 2n − i)` of the block matrix is `y_{i,j}`, defined for
//! `2i ≤ j ≤ 2n − 1`; the x-coordinates satisfy `y_{i,j} = ∏_{j' ≥ j} x_{i,j'}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{declare_vars, parse_rat, Field, Rat, RatFunc};
use crate::error::{Error, Result};

pub type Index = (usize, usize);

/// Which original variable sits at a given y-position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coord {
    C(usize, usize),
    Z(usize, usize),
}

/// The original coordinate named `y_{i,j}`.
pub fn y_coord(i: usize, j: usize) -> Coord {
    if j.is_multiple_of(2) {
        Coord::C(j / 2, i)
    } else {
        Coord::Z((j - 1) / 2, i)
    }
}

/// All y/x index pairs `(i, j)` with `1 ≤ i < n`, `2i ≤ j ≤ 2n − 1`.
pub fn x_indices(n_half: usize) -> Vec<Index> {
    let mut out = Vec::new();
    for i in 1..n_half {
        for j in 2 * i..2 * n_half {
            out.push((i, j));
        }
    }
    out
}

pub fn triangle_indices(n_half: usize) -> Vec<Index> {
    let mut out = Vec::new();
    for i in 1..n_half {
        for j in 1..=i {
            out.push((i, j));
        }
    }
    out
}

/// The c- and z-coordinates of `GL(2n)` unfolding.
#[derive(Clone, Debug, PartialEq)]
pub struct UnfoldVars<T> {
    pub n_half: usize,
    pub c: BTreeMap<Index, T>,
    pub z: BTreeMap<Index, T>,
}

/// The x-coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct XVars<T> {
    pub n_half: usize,
    pub x: BTreeMap<Index, T>,
}

impl<T: Field> UnfoldVars<T> {
    pub fn check(&self) -> Result<()> {
        let want = triangle_indices(self.n_half);
        for (name, map) in [("c", &self.c), ("z", &self.z)] {
            if map.len() != want.len() || !want.iter().all(|k| map.contains_key(k)) {
                return Err(Error::Shape(format!("{name} must have entries for 1 ≤ j ≤ i < {}", self.n_half)));
            }
        }
        Ok(())
    }

    pub fn get(&self, coord: Coord) -> &T {
        match coord {
            Coord::C(i, j) => &self.c[&(i, j)],
            Coord::Z(i, j) => &self.z[&(i, j)],
        }
    }

    pub fn set(&mut self, coord: Coord, v: T) {
        match coord {
            Coord::C(i, j) => self.c.insert((i, j), v),
            Coord::Z(i, j) => self.z.insert((i, j), v),
        };
    }

    pub fn y(&self, i: usize, j: usize) -> &T {
        self.get(y_coord(i, j))
    }

    /// Row sum `c_i = Σ_{j ≤ i} c_{i,j}`.
    pub fn c_row_sum(&self, i: usize) -> T {
        (1..=i).fold(T::zero(), |acc, j| acc.add(&self.c[&(i, j)]))
    }

    pub fn to_x(&self) -> Result<XVars<T>> {
        self.check()?;
        let n = self.n_half;
        let mut x = BTreeMap::new();
        for (i, j) in x_indices(n) {
            let v = if j == 2 * n - 1 {
                self.y(i, j).clone()
            } else {
                let next = self.y(i, j + 1);
                if next.is_zero() {
                    return Err(Error::Degenerate(format!("y_{{{i},{}}} vanishes", j + 1)));
                }
                self.y(i, j).div(next)
            };
            x.insert((i, j), v);
        }
        Ok(XVars { n_half: n, x })
    }
}

impl<T: Field> XVars<T> {
    pub fn check(&self) -> Result<()> {
        let want = x_indices(self.n_half);
        if self.x.len() != want.len() || !want.iter().all(|k| self.x.contains_key(k)) {
            return Err(Error::Shape(format!("x must have entries for 2i ≤ j < {}", 2 * self.n_half)));
        }
        Ok(())
    }

    /// `y_{i,j} = ∏_{j' ≥ j} x_{i,j'}`.
    pub fn y(&self, i: usize, j: usize) -> T {
        (j..2 * self.n_half).fold(T::one(), |acc, jj| acc.mul(&self.x[&(i, jj)]))
    }

    pub fn to_unfold(&self) -> Result<UnfoldVars<T>> {
        self.check()?;
        let mut v = UnfoldVars { n_half: self.n_half, c: BTreeMap::new(), z: BTreeMap::new() };
        for (i, j) in x_indices(self.n_half) {
            v.set(y_coord(i, j), self.y(i, j));
        }
        Ok(v)
    }
}

impl UnfoldVars<RatFunc> {
    /// Independent indeterminates `c{i}{j}`, `z{i}{j}`.
    pub fn symbolic(n_half: usize, tag: &str) -> Self {
        let mut names = Vec::new();
        for (i, j) in triangle_indices(n_half) {
            names.push(format!("{tag}c{i}_{j}"));
            names.push(format!("{tag}z{i}_{j}"));
        }
        declare_vars(&names);
        let mut c = BTreeMap::new();
        let mut z = BTreeMap::new();
        for (i, j) in triangle_indices(n_half) {
            c.insert((i, j), RatFunc::var(&format!("{tag}c{i}_{j}")));
            z.insert((i, j), RatFunc::var(&format!("{tag}z{i}_{j}")));
        }
        UnfoldVars { n_half, c, z }
    }
}

impl XVars<RatFunc> {
    /// Independent indeterminates `x{i}_{j}`.
    pub fn symbolic(n_half: usize, tag: &str) -> Self {
        let names: Vec<String> = x_indices(n_half).iter().map(|(i, j)| format!("{tag}x{i}_{j}")).collect();
        declare_vars(&names);
        let x = x_indices(n_half).into_iter().zip(&names).map(|(k, name)| (k, RatFunc::var(name))).collect();
        XVars { n_half, x }
    }
}

impl<T: Field> XVars<T> {
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> XVars<U> {
        XVars { n_half: self.n_half, x: self.x.iter().map(|(k, v)| (*k, f(v))).collect() }
    }
}

impl<T: Field> UnfoldVars<T> {
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> UnfoldVars<U> {
        UnfoldVars {
            n_half: self.n_half,
            c: self.c.iter().map(|(k, v)| (*k, f(v))).collect(),
            z: self.z.iter().map(|(k, v)| (*k, f(v))).collect(),
        }
    }
}

/// Wire form: either `c` and `z`, or `x`, keyed by `"i,j"`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Default)]
pub struct UnfoldVarsJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<BTreeMap<String, String>>,
}

fn parse_key(k: &str) -> Result<Index> {
    let (a, b) = k.split_once(',').ok_or_else(|| Error::Parse(format!("index key {k:?} is not \"i,j\"")))?;
    let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad index {k:?}")))?;
    let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad index {k:?}")))?;
    Ok((a, b))
}

fn parse_map(m: &BTreeMap<String, String>) -> Result<BTreeMap<Index, Rat>> {
    m.iter().map(|(k, v)| Ok((parse_key(k)?, parse_rat(v)?))).collect()
}

/// Numeric variables parsed from JSON, in whichever coordinates were supplied.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedVars {
    Cz(UnfoldVars<Rat>),
    X(XVars<Rat>),
}

impl UnfoldVarsJson {
    pub fn parse(&self) -> Result<ParsedVars> {
        if self.n < 2 {
            return Err(Error::Domain("n must be at least 2".into()));
        }
        match (&self.c, &self.z, &self.x) {
            (Some(c), Some(z), None) => {
                let v = UnfoldVars { n_half: self.n, c: parse_map(c)?, z: parse_map(z)? };
                v.check()?;
                Ok(ParsedVars::Cz(v))
            }
            (None, None, Some(x)) => {
                let v = XVars { n_half: self.n, x: parse_map(x)? };
                v.check()?;
                if v.x.values().any(Field::is_zero) {
                    return Err(Error::Domain("x-coordinates must be nonzero".into()));
                }
                Ok(ParsedVars::X(v))
            }
            _ => Err(Error::Parse("supply either both \"c\" and \"z\", or \"x\"".into())),
        }
    }
}

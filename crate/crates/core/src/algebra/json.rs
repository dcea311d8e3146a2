use serde::{Deserialize, Serialize};

use super::matrix::GenMatrix;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Wire form of a matrix: every entry is a rational-function expression string.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &GenMatrix<RatFunc>) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<GenMatrix<RatFunc>> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Shape(format!("entries do not match declared {}x{}", self.rows, self.cols)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| RatFunc::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if self.rows == 0 {
            return Ok(GenMatrix::zeros(0, self.cols));
        }
        GenMatrix::from_rows(rows)
    }
}

pub fn matrix_from_json(text: &str) -> Result<GenMatrix<RatFunc>> {
    let mj: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    mj.to_matrix()
}

pub fn matrix_to_json(m: &GenMatrix<RatFunc>) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("matrix serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let text = r#"{"rows":2,"cols":2,"entries":[["1/2","jx11"],["(jx11 + 1)/jy","-3"]]}"#;
        let m = matrix_from_json(text).unwrap();
        let out = matrix_to_json(&m);
        assert_eq!(matrix_to_json(&matrix_from_json(&out).unwrap()), out);
        assert_eq!(matrix_from_json(&out).unwrap(), m);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matrix_from_json(r#"{"rows":2,"cols":2,"entries":[["1","2"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#).is_err());
    }
}

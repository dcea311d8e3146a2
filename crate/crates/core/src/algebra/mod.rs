//! Exact arithmetic: rationals, multivariate rational functions, matrices and
//! their triangular factorizations.

pub mod crat;
pub mod field;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod udl;

pub use crat::CRat;
pub use field::Field;
pub use json::{matrix_from_json, matrix_to_json, MatrixJson};
pub use matrix::GenMatrix;
pub use poly::{declare_vars, gcd, var_id, var_name, Poly};
pub use rat::{format_rat, is_integer, parse_rat, rat, rat_int, rat_to_f64, Rat};
pub use ratfunc::RatFunc;
pub use udl::{
    corollary_h, corollary_superdiagonal, generic_matrix, nhn_decompose, trailing_minors, udl_explicit, udl_oracle,
    Nhn, UdlFactors,
};

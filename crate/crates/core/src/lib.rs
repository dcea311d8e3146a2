//! Archimedean gamma factors for exterior-square L-functions on `GL(2n)`.
//!
//! The crate is organized as:
//! - [`algebra`]: exact rationals, rational functions, matrices and UDL/NHN factorizations;
//! - [`shuffle`]: the shuffled matrix of the unfolded integral, its change of
//!   variables, the recursive lower factor and the Whittaker closed form;
//! - [`special`]: `Γ`, `Γ_R`, `Γ_C`, the factors `G_δ` and their integral representation;
//! - [`lfactors`]: representation data, archimedean L-factors, functional
//!   equations and pole bookkeeping;
//! - [`euler`]: unramified Euler factors and completed L-values;
//! - [`report`]: check results and the run report shared by the CLI and tests.

pub mod algebra;
pub mod error;
pub mod euler;
pub mod lfactors;
pub mod report;
pub mod shuffle;
pub mod special;

pub use error::{Error, Result};

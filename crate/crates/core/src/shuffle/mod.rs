//! The shuffled matrix of the unfolded integral and everything built on it.

pub mod block;
pub mod identities;
pub mod kappa;
pub mod sigma;
pub mod table;
pub mod vars;
pub mod whittaker;

pub use block::{
    agreeing_matrix, build_b, build_block_a, shuffled_matrix, tilde_relations_hold, tilde_residuals, tilde_vars,
};
pub use identities::{
    altsum_check, lower_factor_oracle, lower_factor_recursive, superdiag_sum, superdiag_sum_oracle, superdiag_sum_x,
};
pub use kappa::{kappa_signs, KappaSigns};
pub use sigma::{sigma, ShuffleSigma};
pub use table::{unfolded_gamma_table, GammaTable, GammaTableEntry};
pub use vars::{ParsedVars, UnfoldVars, UnfoldVarsJson, XVars};
pub use whittaker::{shuffled_whittaker_closed, shuffled_whittaker_oracle, whittaker_eval};

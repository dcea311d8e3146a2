//! `Γ`, `Γ_R`, `Γ_C` and the factors `G_δ`, with an independent quadrature path for `G_δ`.

pub mod gamma;
pub mod gdelta;
pub mod integral;
pub mod quad;

pub use gamma::{gamma, gamma_c, gamma_r, ln_gamma};
pub use gdelta::{g_delta, gamma_r_ratio, gcancel, i_pow, integer_value};
pub use integral::{g_delta_integral, CutoffSpec};

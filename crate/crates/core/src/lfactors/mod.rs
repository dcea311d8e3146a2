//! Archimedean exterior-square L-factors: representation data, the embedding
//! parameters, `L_∞`, the functional equation and pole bookkeeping.

pub mod embedding;
pub mod fe;
pub mod gammaexpr;
pub mod linf;
pub mod partial;
pub mod poles;
pub mod repr;

pub use embedding::{rho, EmbeddingParams};
pub use fe::{fe_ratio_check, fe_sweep, FeReport, FeSample};
pub use gammaexpr::{GammaExpr, GammaFactor, GammaKind};
pub use linf::{fe_g_product, l_inf, omega, omega_exponent, script_g, script_g_tilde, LInf};
pub use partial::{holomorphy_check, partial_products, HolomorphyReport, PartialProducts};
pub use poles::{pole_enumeration, pole_families, PoleEntry, PoleFamily, PoleList};
pub use repr::{casselman_embedding, full_level_violations, random_repr, DsBlock, ReprData, SignBlock, Violation};

//! Symbolic algebra over Mellin-domain gamma-quotient symbols: operational
//! rules, convolution and factoring, strips of analyticity, the complete
//! monotonicity duality, and compilation of a symbol into a residue power
//! series.  Every series representation of the fundamental solution and of
//! the subordination kernels is produced by this module.

pub mod builtins;
mod series;
mod symbol;

pub use builtins::{
    bessel_symbol, builtin, exp_symbol, k_gauss_symbol, k_space_symbol, k_symbol, ml2_symbol,
    ml_symbol, phi_2d_symbol, phi_general_symbol, phi_theorem_symbol, phi_time_symbol,
    wright_symbol,
};
pub use series::{
    residue_series, residue_series_with_budget, SeriesRep, SeriesTerm, Side, DEFAULT_BUDGET,
};
pub use symbol::{AnalyticStrip, GammaQuotientSymbol, GammaTerm, CANCEL_TOL};

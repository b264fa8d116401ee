//! Explicit constants, bound functions and threshold inequalities.
//!
//! Quantities on the `x` scale (`x = exp(exp(30.5))` and the like) are
//! carried as [`LogValue`]s; the final threshold inequalities are evaluated
//! in plain `f64` on the `t = log log x` scale where both sides are
//! representable.

mod bounds;
mod logvalue;
mod params;
mod threshold;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bounds::{
    absorption_ratio, auxiliary_zeta_bound, big_constant_c, dusart_bounds, dyadic_tail_constant,
    eta, explicit_formula_envelope, first_moment_bound, integral_i_bound, sn_bound,
    zero_density_bound, AuxiliaryBound, BoundEval, DusartBounds, Height, Hypothesis,
    ZeroDensityBound, DUSART_LOWER_FROM, DUSART_UPPER_FROM,
};
pub use logvalue::{log_add_exp, log_sub_exp, LogValue, Sign};
pub use params::{AnalyticParams, ALPHA_DPG, ALPHA_GRAPHIC, A_EXPONENT, C0, C1, H0};
pub use threshold::{
    count_sign_changes, find_threshold, threshold_case2, threshold_dpg, threshold_sides,
    ThresholdKind, ThresholdReport, ThresholdSides, SWEEP_STEP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RangeSide {
    Lower,
    Upper,
}

#[derive(Debug, Error)]
pub enum AnalyticError {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("T out of admissible range ({side:?} side): {detail}")]
    TOutOfRange { side: RangeSide, detail: String },
    #[error("no sign change in [{lo}, {hi}]: need failure at lo and success at hi")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("inequality fails again at t = {at} above the crossing {t_min}")]
    Recrossing { t_min: f64, at: f64 },
}

use serde::{Deserialize, Serialize};

use super::AnalyticError;

/// Zero-free region constant (Bellotti).
pub const C0: f64 = 1.0 / 53.989;
/// Zero-density exponent factor `A` in `T^{A(1 - σ)}`.
pub const A_EXPONENT: f64 = 8.0 / 3.0;
/// One-term zero-density constant.
pub const C1: f64 = 2.375;
/// Height to which RH is verified.
pub const H0: f64 = 3.0e12;

/// α for the graphicality argument.
pub const ALPHA_GRAPHIC: f64 = 0.249;
/// α for the DPG argument.
pub const ALPHA_DPG: f64 = 1.0 / 13.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticParams {
    pub c0: f64,
    pub a: f64,
    pub c1: f64,
    pub h0: f64,
    pub alpha: f64,
}

impl AnalyticParams {
    pub fn with_alpha(alpha: f64) -> Self {
        Self {
            c0: C0,
            a: A_EXPONENT,
            c1: C1,
            h0: H0,
            alpha,
        }
    }

    pub fn graphic() -> Self {
        Self::with_alpha(ALPHA_GRAPHIC)
    }

    pub fn dpg() -> Self {
        Self::with_alpha(ALPHA_DPG)
    }

    pub fn validate(&self) -> Result<(), AnalyticError> {
        if !(2.0..=4.0).contains(&self.a) {
            return Err(AnalyticError::Domain(format!(
                "A = {} outside [2, 4]",
                self.a
            )));
        }
        if !(self.alpha > 0.0 && self.alpha < 2.0 / self.a) {
            return Err(AnalyticError::Domain(format!(
                "alpha = {} outside (0, 2/A)",
                self.alpha
            )));
        }
        if !(self.c0 > 0.0 && self.c1 > 0.0) {
            return Err(AnalyticError::Domain("c0 and c1 must be positive".into()));
        }
        Ok(())
    }
}

impl Default for AnalyticParams {
    fn default() -> Self {
        Self::graphic()
    }
}

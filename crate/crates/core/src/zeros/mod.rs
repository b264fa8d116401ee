//! Zeta zero ordinates and the empirical checks built on them: the
//! short-interval zero count, the truncated explicit formula for ψ, and
//! direct quadrature of the mean square of the zero sum.
//!
//! Every ordinate is below the height to which the Riemann hypothesis is
//! verified, so each zero is taken as `1/2 + iγ`; zeros there are simple, so
//! counting ordinates counts zeros.

mod explicit;
mod quadrature;
mod rect;
mod table;

use thiserror::Error;

pub use explicit::{error_ratio_matrix, explicit_formula_psi, ExplicitFormula, RatioEntry};
pub use quadrature::{integral_i_quadrature, QuadratureResult, QUADRATURE_COST_CAP, QUADRATURE_MAX_X};
pub use rect::{rect_count_check, RectCountReport, RectPoint};
pub use table::{load_zeros, ZeroTable};

#[derive(Debug, Error)]
pub enum ZerosError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: ordinate {value} does not exceed the previous one {previous}")]
    Ordering { line: usize, previous: f64, value: f64 },
    #[error("zero table is empty")]
    Empty,
    #[error("checksum mismatch: header says {expected}, data hashes to {found}")]
    Checksum { expected: String, found: String },
    #[error("T = {t} exceeds the largest ordinate {max_ordinate} in the table")]
    InsufficientData { t: f64, max_ordinate: f64 },
    #[error("quadrature cost {cost:.3e} exceeds the cap {cap:.3e}; try T <= {suggested_t:.0}")]
    CostCap { cost: f64, cap: f64, suggested_t: f64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
}

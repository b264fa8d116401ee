use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ZeroTable, ZerosError};
use crate::analytic::explicit_formula_envelope;
use crate::primes::PrimeTable;

/// Ordinates per parallel block; blocks are summed in order so the result
/// does not depend on the thread count.
const BLOCK: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExplicitFormula {
    /// The evaluation point, moved to `x + 1/2` if `x` was an integer.
    pub x: f64,
    pub t: f64,
    pub approx: f64,
    /// `4.6 x log x log log x / T`.
    pub trunc_error: f64,
    pub zeros_used: usize,
}

/// `Re(x^ρ / ρ)` for `ρ = 1/2 + iγ`, with `L = log x` and `sqrt_x = √x`.
pub(crate) fn zero_term(sqrt_x: f64, log_x: f64, gamma: f64) -> f64 {
    let (s, c) = (gamma * log_x).sin_cos();
    sqrt_x * (0.5 * c + gamma * s) / (0.25 + gamma * gamma)
}

fn neumaier(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `x − Σ_{|γ| < T} x^ρ / ρ` over the zeros in the table, conjugate pairs
/// folded into `2 Re(x^ρ / ρ)`.
pub fn explicit_formula_psi(x: f64, t: f64, zeros: &ZeroTable) -> Result<ExplicitFormula, ZerosError> {
    if !(x > 10.0) {
        return Err(ZerosError::Domain(format!("explicit formula needs x > 10, got {x}")));
    }
    if !(t > 50.0) {
        return Err(ZerosError::Domain(format!("explicit formula needs T > 50, got {t}")));
    }
    if t > zeros.max_ordinate() {
        return Err(ZerosError::InsufficientData {
            t,
            max_ordinate: zeros.max_ordinate(),
        });
    }
    let x = if x.fract() == 0.0 { x + 0.5 } else { x };
    let (sqrt_x, log_x) = (x.sqrt(), x.ln());
    let gammas = zeros.below(t);
    let partial: Vec<f64> = gammas
        .par_chunks(BLOCK)
        .map(|chunk| neumaier(chunk.iter().map(|&g| zero_term(sqrt_x, log_x, g))))
        .collect();
    let sum = neumaier(partial.into_iter());
    Ok(ExplicitFormula {
        x,
        t,
        approx: x - 2.0 * sum,
        trunc_error: explicit_formula_envelope(x, t),
        zeros_used: gammas.len(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RatioEntry {
    Evaluated {
        x: f64,
        t: f64,
        approx: f64,
        psi: f64,
        abs_error: f64,
        envelope: f64,
        ratio: f64,
        zeros_used: usize,
    },
    Skipped {
        x: f64,
        t: f64,
        reason: String,
    },
}

impl RatioEntry {
    pub fn ratio(&self) -> Option<f64> {
        match self {
            RatioEntry::Evaluated { ratio, .. } => Some(*ratio),
            RatioEntry::Skipped { .. } => None,
        }
    }
}

/// `|approx − ψ(x)| / envelope` over an `(x, T)` grid. Heights above the
/// table are reported as skipped.
pub fn error_ratio_matrix(zeros: &ZeroTable, xs: &[f64], ts: &[f64]) -> Result<Vec<RatioEntry>, ZerosError> {
    let top = xs.iter().fold(0.0f64, |a, &b| a.max(b)).ceil() as u64 + 1;
    let primes = PrimeTable::new(top.max(2));
    let mut out = Vec::with_capacity(xs.len() * ts.len());
    for &x in xs {
        for &t in ts {
            if t > zeros.max_ordinate() {
                out.push(RatioEntry::Skipped {
                    x,
                    t,
                    reason: format!(
                        "T = {t} exceeds the largest ordinate {:.3}",
                        zeros.max_ordinate()
                    ),
                });
                continue;
            }
            let ef = explicit_formula_psi(x, t, zeros)?;
            let psi = primes
                .psi(ef.x.floor() as u64)
                .map_err(|e| ZerosError::Domain(e.to_string()))?;
            let abs_error = (ef.approx - psi).abs();
            out.push(RatioEntry::Evaluated {
                x: ef.x,
                t,
                approx: ef.approx,
                psi,
                abs_error,
                envelope: ef.trunc_error,
                ratio: abs_error / ef.trunc_error,
                zeros_used: ef.zeros_used,
            });
        }
    }
    Ok(out)
}

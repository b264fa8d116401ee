//! The final inequalities on the scale `t = log log p_n`.
//!
//! Both have the shape
//!
//! ```text
//! log(K · 8.7 C) + k t  <  A α c0 · e^t / (L^{2/3} (log L)^{1/3}),
//! L(t) = a e^t + b t + log c,
//! ```
//!
//! where `L(t)` is the log of the zero-free-region height the third term of
//! the S_N bound is evaluated at.

use serde::{Deserialize, Serialize};

use super::{big_constant_c, AnalyticError, AnalyticParams};
use super::params::{ALPHA_DPG, ALPHA_GRAPHIC};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    /// Graphicality, large-gap case: N' = p^{1/2} / (3 log p).
    Case2,
    /// DPG step: N = p^{1/3} / 12.
    Dpg,
}

struct Shape {
    alpha: f64,
    lhs_factor: f64,
    t_coefficient: f64,
    l_exp: f64,
    l_linear: f64,
    l_const: f64,
    claimed: f64,
}

impl ThresholdKind {
    fn shape(self) -> Shape {
        match self {
            ThresholdKind::Case2 => Shape {
                alpha: ALPHA_GRAPHIC,
                lhs_factor: 3.0,
                t_coefficient: 5.0,
                l_exp: 0.5,
                l_linear: 3.0,
                l_const: 12.0,
                claimed: 30.5,
            },
            ThresholdKind::Dpg => Shape {
                alpha: ALPHA_DPG,
                lhs_factor: 4.0,
                t_coefficient: 4.0,
                l_exp: 2.0 / 3.0,
                l_linear: 2.0,
                l_const: 48.0,
                claimed: 34.5,
            },
        }
    }

    /// The threshold the inequality is claimed to hold from.
    pub fn claimed_threshold(self) -> f64 {
        self.shape().claimed
    }

    pub fn alpha(self) -> f64 {
        self.shape().alpha
    }

    pub fn name(self) -> &'static str {
        match self {
            ThresholdKind::Case2 => "case2",
            ThresholdKind::Dpg => "dpg",
        }
    }
}

impl std::str::FromStr for ThresholdKind {
    type Err = AnalyticError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "case2" => Ok(ThresholdKind::Case2),
            "dpg" => Ok(ThresholdKind::Dpg),
            other => Err(AnalyticError::Domain(format!("unknown threshold {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSides {
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluates both sides at `t`; α is fixed by `kind`, the remaining
/// constants come from `params`.
pub fn threshold_sides(
    kind: ThresholdKind,
    t: f64,
    params: &AnalyticParams,
) -> Result<ThresholdSides, AnalyticError> {
    if !(t > 1.0) {
        return Err(AnalyticError::Domain(format!("threshold needs t > 1, got {t}")));
    }
    let s = kind.shape();
    let p = AnalyticParams {
        alpha: s.alpha,
        ..*params
    };
    p.validate()?;
    let c = big_constant_c(&p);
    let lhs = (s.lhs_factor * 8.7 * c).ln() + s.t_coefficient * t;
    // ln L = t + ln(a + (b t + ln c) e^{-t}), stable for large t
    let ln_l = t + (s.l_exp + (s.l_linear * t + s.l_const.ln()) * (-t).exp()).ln();
    let rhs = p.a * p.alpha * p.c0 * (t - 2.0 / 3.0 * ln_l).exp() / ln_l.powf(1.0 / 3.0);
    Ok(ThresholdSides {
        t,
        lhs,
        rhs,
        holds: lhs < rhs,
    })
}

pub fn threshold_case2(t: f64, params: &AnalyticParams) -> Result<ThresholdSides, AnalyticError> {
    threshold_sides(ThresholdKind::Case2, t, params)
}

pub fn threshold_dpg(t: f64, params: &AnalyticParams) -> Result<ThresholdSides, AnalyticError> {
    threshold_sides(ThresholdKind::Dpg, t, params)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub kind: ThresholdKind,
    pub params: AnalyticParams,
    /// Smallest t (to `tolerance`) from which the inequality holds.
    pub t_min: f64,
    /// Largest t found failing during bisection.
    pub fails_below: f64,
    pub tolerance: f64,
    pub claimed_t: f64,
    pub holds_at_claimed_t: bool,
    /// Forward sweep from `t_min` to the upper end of the bracket.
    pub samples: Vec<ThresholdSides>,
}

/// Sweep step used to confirm there is no re-crossing above `t_min`.
pub const SWEEP_STEP: f64 = 0.01;

/// Bisection for the crossing point in `[lo, hi]`, followed by a forward
/// sweep confirming the inequality keeps holding up to `hi`.
pub fn find_threshold(
    kind: ThresholdKind,
    lo: f64,
    hi: f64,
    tol: f64,
    params: &AnalyticParams,
) -> Result<ThresholdReport, AnalyticError> {
    let at = |t: f64| threshold_sides(kind, t, params);
    if !(lo < hi) || !(tol > 0.0) {
        return Err(AnalyticError::Domain(format!(
            "bad bracket [{lo}, {hi}] or tolerance {tol}"
        )));
    }
    if at(lo)?.holds || !at(hi)?.holds {
        return Err(AnalyticError::NoSignChange { lo, hi });
    }
    let (mut fail, mut hold) = (lo, hi);
    while hold - fail > tol {
        let mid = 0.5 * (fail + hold);
        if at(mid)?.holds {
            hold = mid;
        } else {
            fail = mid;
        }
    }
    let steps = ((hi - hold) / SWEEP_STEP).floor() as usize;
    let mut samples = Vec::with_capacity(steps + 2);
    for i in 0..=steps {
        samples.push(at(hold + i as f64 * SWEEP_STEP)?);
    }
    samples.push(at(hi)?);
    if let Some(bad) = samples.iter().find(|s| !s.holds) {
        return Err(AnalyticError::Recrossing {
            t_min: hold,
            at: bad.t,
        });
    }
    let claimed = kind.claimed_threshold();
    Ok(ThresholdReport {
        kind,
        params: AnalyticParams {
            alpha: kind.alpha(),
            ..*params
        },
        t_min: hold,
        fails_below: fail,
        tolerance: tol,
        claimed_t: claimed,
        holds_at_claimed_t: at(claimed)?.holds,
        samples,
    })
}

/// Number of changes of `holds` along a grid with the given step.
pub fn count_sign_changes(
    kind: ThresholdKind,
    lo: f64,
    hi: f64,
    step: f64,
    params: &AnalyticParams,
) -> Result<usize, AnalyticError> {
    let n = ((hi - lo) / step).round() as usize;
    let mut changes = 0;
    let mut prev = threshold_sides(kind, lo, params)?.holds;
    for i in 1..=n {
        let t = (lo + i as f64 * step).min(hi);
        let cur = threshold_sides(kind, t, params)?.holds;
        if cur != prev {
            changes += 1;
        }
        prev = cur;
    }
    Ok(changes)
}

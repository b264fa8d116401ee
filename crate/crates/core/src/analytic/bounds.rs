//! Explicit bound functions, evaluated in the log domain where the
//! magnitudes require it.

use serde::{Deserialize, Serialize};

use super::{AnalyticError, AnalyticParams, LogValue, RangeSide};

/// Two-term zero-density constants and the one-term absorption constant.
const ZD_MAIN: f64 = 2.177;
const ZD_LOG_SQUARED: f64 = 5.663;
const ZD_ONE_TERM: f64 = 2.375;
const ZD_EXPONENT: f64 = 8.0 / 3.0;

pub const DUSART_LOWER_FROM: f64 = 599.0;
pub const DUSART_UPPER_FROM: f64 = 355_991.0;

/// Where a zero-free-region height is given: directly, or by its logarithm
/// when the height itself is astronomically large.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scale", content = "value", rename_all = "lowercase")]
pub enum Height {
    Linear(f64),
    Log(f64),
}

/// η(t) = c0 (log t)^{-2/3} (log log t)^{-1/3}, defined for t > e.
pub fn eta(t: Height, c0: f64) -> Result<f64, AnalyticError> {
    let log_t = match t {
        Height::Linear(t) => {
            if !(t > std::f64::consts::E) {
                return Err(AnalyticError::Domain(format!("eta needs t > e, got {t}")));
            }
            t.ln()
        }
        Height::Log(l) => {
            if !(l > 1.0) {
                return Err(AnalyticError::Domain(format!(
                    "eta needs log t > 1, got {l}"
                )));
            }
            l
        }
    };
    Ok(c0 * log_t.powf(-2.0 / 3.0) * log_t.ln().powf(-1.0 / 3.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroDensityBound {
    /// `2.177 (log T)^{5-2σ} T^{8(1-σ)/3} + 5.663 log² T`.
    pub two_term: LogValue,
    /// `2.375 (log T)^{5-2σ} T^{8(1-σ)/3}`.
    pub one_term: LogValue,
}

/// Upper bounds for N(σ, T), for `3/5 <= σ <= 1` and `T > H0`.
pub fn zero_density_bound(
    sigma: f64,
    t: LogValue,
    h0: f64,
) -> Result<ZeroDensityBound, AnalyticError> {
    if !(0.6..=1.0).contains(&sigma) {
        return Err(AnalyticError::Domain(format!(
            "sigma = {sigma} outside [3/5, 1]"
        )));
    }
    if !(t > LogValue::from_f64(h0)) {
        return Err(AnalyticError::Domain(format!("T = {t} is not above H0 = {h0}")));
    }
    let log_t = t.ln_abs();
    let core = (5.0 - 2.0 * sigma) * log_t.ln() + ZD_EXPONENT * (1.0 - sigma) * log_t;
    let main = LogValue::from_ln(ZD_MAIN.ln() + core);
    let tail = LogValue::from_ln(ZD_LOG_SQUARED.ln() + 2.0 * log_t.ln());
    Ok(ZeroDensityBound {
        two_term: main + tail,
        one_term: LogValue::from_ln(ZD_ONE_TERM.ln() + core),
    })
}

/// `5.663 / log T`, which must stay below 0.198 for the one-term bound to
/// absorb the `log² T` term.
pub fn absorption_ratio(t: f64) -> f64 {
    ZD_LOG_SQUARED / t.ln()
}

/// `C(A, α, c1) = 4 · 1836 · c1 / (A α) · (2/A - α)^4`.
pub fn big_constant_c(params: &AnalyticParams) -> f64 {
    let p = params;
    4.0 * 1836.0 * p.c1 / (p.a * p.alpha) * (2.0 / p.a - p.alpha).powi(4)
}

/// `Σ_{j>=1} 2^{-j(1 - 8/3 · 3/4 · 1/40)}`, the factor absorbed into 8.7C.
pub fn dyadic_tail_constant() -> f64 {
    let s = 1.0 - (8.0 / 3.0) * (3.0 / 4.0) * (1.0 / 40.0);
    1.0 / (2f64.powf(s) - 1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

impl Hypothesis {
    fn new(name: &str, holds: bool) -> Self {
        Self {
            name: name.to_string(),
            holds,
        }
    }
}

/// A bound value together with the side conditions under which it is proven.
/// When any of them fails the value is still returned, flagged as an
/// extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEval {
    pub value: LogValue,
    pub hypotheses: Vec<Hypothesis>,
}

impl BoundEval {
    pub fn extrapolated(&self) -> bool {
        self.hypotheses.iter().any(|h| !h.holds)
    }
}

fn log_of(x: LogValue, what: &str) -> Result<f64, AnalyticError> {
    // x must exceed e so that log log x is defined and positive
    if !x.is_positive() || x.ln_abs() <= 1.0 {
        return Err(AnalyticError::Domain(format!("{what} = {x} must exceed e")));
    }
    Ok(x.ln_abs())
}

fn positive(v: LogValue, what: &str) -> Result<(), AnalyticError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(AnalyticError::Domain(format!("{what} must be positive")))
    }
}

/// Upper bound for S_N(x):
/// `M(x) log x + 8.7 C x^{1 - A α η(4 N^{-1} x log² x)} log⁴ x`.
pub fn sn_bound(
    x: LogValue,
    n: LogValue,
    params: &AnalyticParams,
    max_gap: LogValue,
) -> Result<BoundEval, AnalyticError> {
    if !(params.alpha > 0.0 && params.alpha < 0.75) {
        return Err(AnalyticError::Domain(format!(
            "alpha = {} outside (0, 3/4)",
            params.alpha
        )));
    }
    params.validate()?;
    let lx = log_of(x, "x")?;
    positive(n, "N")?;
    positive(max_gap, "M(x)")?;
    let llx = lx.ln();
    let ln_n = n.ln_abs();

    let first = max_gap * LogValue::from_f64(lx);
    let eta_log_height = 4f64.ln() - ln_n + lx + 2.0 * llx;
    let eta_val = eta(Height::Log(eta_log_height), params.c0)?;
    let exponent = 1.0 - params.a * params.alpha * eta_val;
    let c = big_constant_c(params);
    let second = LogValue::from_ln((8.7 * c).ln() + exponent * lx + 4.0 * llx);

    let n_floor = 8f64.ln() + (0.25 + params.alpha) * lx + 3.0 * llx;
    Ok(BoundEval {
        value: first + second,
        hypotheses: vec![
            Hypothesis::new("x >= exp(4000)", lx >= 4000.0),
            Hypothesis::new("N >= 8 x^(1/4 + alpha) log^3 x", ln_n >= n_floor),
        ],
    })
}

/// First-moment bound for gaps over `[x, 2x]`:
/// `max gap + 8.1 I / (δ² x²)`.
pub fn first_moment_bound(
    x: LogValue,
    delta: f64,
    integral: LogValue,
    max_gap: LogValue,
) -> Result<BoundEval, AnalyticError> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(AnalyticError::Domain(format!("delta = {delta} outside (0, 1]")));
    }
    let lx = log_of(x, "x")?;
    if integral.sign() == super::Sign::Negative || max_gap.sign() == super::Sign::Negative {
        return Err(AnalyticError::Domain(
            "integral and max gap must be nonnegative".into(),
        ));
    }
    let scale = LogValue::from_ln(8.1f64.ln() - 2.0 * delta.ln() - 2.0 * lx);
    let value = max_gap + integral * scale;
    // N = 4δx against 8 log² x
    let n_ok = 4f64.ln() + delta.ln() + lx > 8f64.ln() + 2.0 * lx.ln();
    Ok(BoundEval {
        value,
        hypotheses: vec![
            Hypothesis::new("x >= exp(1000)", lx >= 1000.0),
            Hypothesis::new("N = 4 delta x > 8 log^2 x", n_ok),
        ],
    })
}

/// Bound for the zero-sum integral: `C δ² x^{3 - A α η(T)} log⁴ x`, valid for
/// `10 < T <= x^{2/A - α} / log x`.
pub fn integral_i_bound(
    x: LogValue,
    t: LogValue,
    delta: f64,
    params: &AnalyticParams,
) -> Result<BoundEval, AnalyticError> {
    params.validate()?;
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(AnalyticError::Domain(format!("delta = {delta} outside (0, 1]")));
    }
    let lx = log_of(x, "x")?;
    positive(t, "T")?;
    let lt = t.ln_abs();
    if !(lt > 10f64.ln()) {
        return Err(AnalyticError::TOutOfRange {
            side: RangeSide::Lower,
            detail: format!("T = {t} must exceed 10"),
        });
    }
    let t_max = (2.0 / params.a - params.alpha) * lx - lx.ln();
    if lt > t_max {
        return Err(AnalyticError::TOutOfRange {
            side: RangeSide::Upper,
            detail: format!("log T = {lt} exceeds log(x^(2/A - alpha) / log x) = {t_max}"),
        });
    }
    let eta_t = eta(Height::Log(lt), params.c0)?;
    let c = big_constant_c(params);
    let ln_value = c.ln()
        + 2.0 * delta.ln()
        + (3.0 - params.a * params.alpha * eta_t) * lx
        + 4.0 * lx.ln();
    Ok(BoundEval {
        value: LogValue::from_ln(ln_value),
        hypotheses: vec![Hypothesis::new("x >= exp(1000)", lx >= 1000.0)],
    })
}

/// Auxiliary bounds on ζ'/ζ and the truncation error of the explicit
/// formula, each with its own domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AuxiliaryBound {
    /// |ζ'/ζ(σ + it)| < 1/(σ - 1) - 1/(2σ²) for σ > 1.
    Delange { sigma: f64 },
    /// |ζ'/ζ(σ + it)| < 9 + log|σ + it| for σ <= -1, σ an odd integer or
    /// |t| >= 1.
    LeftHalfPlane { sigma: f64, t: f64 },
    /// log² t + 20 log t on a shifted horizontal line, for t > 50.
    ShiftedContour { t: f64 },
    /// 4.6 x log x log log x / T, for x > 10^18 and 50 < T < x - 1. (Above
    /// 2^53 every f64 is an integer, so x ∉ ℤ cannot be checked here.)
    ExplicitFormulaError { x: f64, t: f64 },
}

pub fn auxiliary_zeta_bound(bound: AuxiliaryBound) -> Result<f64, AnalyticError> {
    match bound {
        AuxiliaryBound::Delange { sigma } => {
            if !(sigma > 1.0) {
                return Err(AnalyticError::Domain(format!("Delange bound needs sigma > 1, got {sigma}")));
            }
            Ok(1.0 / (sigma - 1.0) - 1.0 / (2.0 * sigma * sigma))
        }
        AuxiliaryBound::LeftHalfPlane { sigma, t } => {
            let odd_integer = sigma.fract() == 0.0 && (sigma as i64).rem_euclid(2) == 1;
            if !(sigma <= -1.0) || !(odd_integer || t.abs() >= 1.0) {
                return Err(AnalyticError::Domain(format!(
                    "left half-plane bound needs sigma <= -1 and (sigma odd or |t| >= 1), got sigma = {sigma}, t = {t}"
                )));
            }
            Ok(9.0 + sigma.hypot(t).ln())
        }
        AuxiliaryBound::ShiftedContour { t } => {
            if !(t > 50.0) {
                return Err(AnalyticError::Domain(format!("shifted contour bound needs t > 50, got {t}")));
            }
            Ok(t.ln().powi(2) + 20.0 * t.ln())
        }
        AuxiliaryBound::ExplicitFormulaError { x, t } => {
            if !(x > 1e18) || !(t > 50.0 && t < x - 1.0) {
                return Err(AnalyticError::Domain(format!(
                    "explicit formula error needs x > 1e18 and 50 < T < x - 1, got x = {x}, T = {t}"
                )));
            }
            Ok(explicit_formula_envelope(x, t))
        }
    }
}

/// `4.6 x log x log log x / T` with no domain restriction beyond `x > e`;
/// used to compare desk-scale data against the proven envelope.
pub fn explicit_formula_envelope(x: f64, t: f64) -> f64 {
    4.6 * x * x.ln() * x.ln().ln() / t
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DusartBounds {
    pub lower: f64,
    pub upper: f64,
    pub lower_applies: bool,
    pub upper_applies: bool,
}

/// `(x/log x)(1 + 1/log x) <= π(x) <= (x/log x)(1 + 1/log x + 2.51/log² x)`.
pub fn dusart_bounds(x: f64) -> DusartBounds {
    let l = x.ln();
    let base = x / l;
    DusartBounds {
        lower: base * (1.0 + 1.0 / l),
        upper: base * (1.0 + 1.0 / l + 2.51 / (l * l)),
        lower_applies: x >= DUSART_LOWER_FROM,
        upper_applies: x >= DUSART_UPPER_FROM,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::params::{C0, H0};

    #[test]
    fn eta_reference_values() {
        let e10 = eta(Height::Linear(10f64.exp()), C0).unwrap();
        let direct = 1.0 / (53.989 * 10f64.powf(2.0 / 3.0) * 10f64.ln().powf(1.0 / 3.0));
        assert!((e10 - direct).abs() < 1e-15);
        // mpmath: 0.00302196539611045...
        assert!((e10 - 0.003_021_965_396_110_455).abs() < 1e-15);
        let e4 = eta(Height::Linear(4.0), C0).unwrap();
        assert!((e4 - 0.021_632_356_614_625_78).abs() < 1e-15);
        assert!(e4 < 1.0 / 40.0);
        assert_eq!(eta(Height::Log(10.0), C0).unwrap(), e10);
        assert!(eta(Height::Linear(2.7), C0).is_err());
        assert!(eta(Height::Log(1.0), C0).is_err());
    }

    #[test]
    fn eta_decreasing_far_out() {
        // t up to 10^100 and beyond, handled through log t
        let mut prev = f64::INFINITY;
        for i in 0..1000 {
            let log_t = 4f64.ln() + (100.0 * 10f64.ln() - 4f64.ln()) * i as f64 / 999.0;
            let v = eta(Height::Log(log_t), C0).unwrap();
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn zero_density_at_sigma_one() {
        let t = LogValue::from_f64(1e13);
        let zd = zero_density_bound(1.0, t, H0).unwrap();
        let lt = 1e13f64.ln();
        let expect = 2.177 * lt.powi(3) + 5.663 * lt * lt;
        assert!((zd.two_term.to_f64() - expect).abs() < 1e-9 * expect);
        assert!((zd.one_term.to_f64() - 2.375 * lt.powi(3)).abs() < 1e-9 * expect);
        assert!(zd.two_term <= zd.one_term);
    }

    #[test]
    fn zero_density_domain() {
        assert!(zero_density_bound(0.5, LogValue::from_f64(1e13), H0).is_err());
        assert!(zero_density_bound(0.7, LogValue::from_f64(1e12), H0).is_err());
        let just_above = LogValue::from_f64(H0 * (1.0 + 1e-9));
        let zd = zero_density_bound(0.6, just_above, H0).unwrap();
        assert!(zd.two_term.ln_abs().is_finite());
        assert!(zd.two_term <= zd.one_term);
        assert!(absorption_ratio(H0) < 0.198);
    }

    #[test]
    fn constant_c_values() {
        let c_graphic = big_constant_c(&AnalyticParams::graphic());
        let c_dpg = big_constant_c(&AnalyticParams::dpg());
        // mpmath: 1654.928008887713..., 17451.37717759658...
        assert!((c_graphic - 1_654.928_008_887_714).abs() < 1e-9);
        assert!((c_dpg - 17_451.377_177_596_58).abs() < 1e-8);
        assert!(c_graphic <= 1655.0 && c_dpg <= 17_452.0);
        let near_limit = AnalyticParams::with_alpha(0.75 - 1e-6);
        assert!(big_constant_c(&near_limit) < 1e-15);
    }

    #[test]
    fn dyadic_tail_by_partial_sums() {
        let s = 1.0 - (8.0 / 3.0) * (3.0 / 4.0) * (1.0 / 40.0);
        let partial: f64 = (1..400).map(|j| 2f64.powf(-(j as f64) * s)).sum();
        assert!((dyadic_tail_constant() - partial).abs() < 1e-12);
        assert!((partial - 1.073_107_995_579).abs() < 1e-9);
        assert!(partial < 1.074);
    }

    #[test]
    fn sn_bound_structure() {
        let p = AnalyticParams::graphic();
        let lx = 5000.0f64;
        let x = LogValue::from_ln(lx);
        let n = LogValue::from_ln(8f64.ln() + 0.499 * lx + 3.0 * lx.ln());
        let m = LogValue::from_ln(0.999 * lx);
        let b = sn_bound(x, n, &p, m).unwrap();
        assert!(b.value.ln_abs().is_finite());
        assert!(b.hypotheses.iter().all(|h| h.holds));
        // N >= x: the formula is still M log x + second term
        let big_n = LogValue::from_ln(lx + 1.0);
        let b2 = sn_bound(x, big_n, &p, m).unwrap();
        let eta_v = eta(Height::Log(4f64.ln() - 1.0 + 2.0 * lx.ln()), C0).unwrap();
        let second = LogValue::from_ln(
            (8.7 * big_constant_c(&p)).ln() + (1.0 - p.a * p.alpha * eta_v) * lx + 4.0 * lx.ln(),
        );
        let expect = m * LogValue::from_f64(lx) + second;
        assert!((b2.value.ln_abs() - expect.ln_abs()).abs() < 1e-12 * lx);
        let small = sn_bound(LogValue::from_ln(100.0), LogValue::from_ln(60.0), &p, m).unwrap();
        assert!(small.extrapolated());
        assert!(sn_bound(x, n, &AnalyticParams::with_alpha(0.8), m).is_err());
    }

    #[test]
    fn first_moment_cancellation() {
        let lx = 1000.0;
        let x = LogValue::from_ln(lx);
        let m = LogValue::from_f64(17.0);
        let b = first_moment_bound(x, 0.5, LogValue::ZERO, m).unwrap();
        assert_eq!(b.value, m);
        let b = first_moment_bound(x, 1.0, x * x, m).unwrap();
        assert!((b.value.to_f64() - 25.1).abs() < 1e-9);
        assert!(b.hypotheses.iter().all(|h| h.holds));
        assert!(first_moment_bound(x, 1.5, x, m).is_err());
    }

    #[test]
    fn integral_bound_delta_scaling_and_range() {
        let p = AnalyticParams::graphic();
        let lx = 5000.0;
        let x = LogValue::from_ln(lx);
        let t = LogValue::from_f64(2.0 / 0.5 * lx * lx);
        let a = integral_i_bound(x, t, 0.5, &p).unwrap();
        let b = integral_i_bound(x, t, 0.25, &p).unwrap();
        let ratio = (b.value / a.value).to_f64();
        assert!((ratio - 0.25).abs() < 1e-12);
        let t_max_ln = (2.0 / p.a - p.alpha) * lx - lx.ln();
        let over = LogValue::from_ln(t_max_ln + 1e-6);
        assert!(matches!(
            integral_i_bound(x, over, 0.5, &p),
            Err(AnalyticError::TOutOfRange { side: RangeSide::Upper, .. })
        ));
        assert!(integral_i_bound(x, LogValue::from_ln(t_max_ln - 1e-6), 0.5, &p).is_ok());
        assert!(matches!(
            integral_i_bound(x, LogValue::from_f64(9.0), 0.5, &p),
            Err(AnalyticError::TOutOfRange { side: RangeSide::Lower, .. })
        ));
    }

    #[test]
    fn auxiliary_values() {
        let d = auxiliary_zeta_bound(AuxiliaryBound::Delange { sigma: 2.0 }).unwrap();
        assert!((d - 0.875).abs() < 1e-15);
        let l = auxiliary_zeta_bound(AuxiliaryBound::LeftHalfPlane { sigma: -1.0, t: 1.0 }).unwrap();
        assert!((l - (9.0 + 2f64.sqrt().ln())).abs() < 1e-15);
        let s = auxiliary_zeta_bound(AuxiliaryBound::ShiftedContour { t: 100.0 }).unwrap();
        assert!((s - (100f64.ln().powi(2) + 20.0 * 100f64.ln())).abs() < 1e-12);
        assert!(auxiliary_zeta_bound(AuxiliaryBound::Delange { sigma: 1.0 }).is_err());
        assert!(auxiliary_zeta_bound(AuxiliaryBound::LeftHalfPlane { sigma: -2.0, t: 0.5 }).is_err());
        assert!(auxiliary_zeta_bound(AuxiliaryBound::LeftHalfPlane { sigma: -3.0, t: 0.5 }).is_ok());
        assert!(auxiliary_zeta_bound(AuxiliaryBound::ShiftedContour { t: 50.0 }).is_err());
        assert!(auxiliary_zeta_bound(AuxiliaryBound::ExplicitFormulaError { x: 1e6 + 0.5, t: 100.0 }).is_err());
        let e = auxiliary_zeta_bound(AuxiliaryBound::ExplicitFormulaError { x: 2.5e18 + 0.5, t: 1e4 }).unwrap();
        assert!((e - explicit_formula_envelope(2.5e18 + 0.5, 1e4)).abs() < 1e-3);
    }

    #[test]
    fn dusart_reference_points() {
        let b = dusart_bounds(599.0);
        assert!((b.lower - 108.308_797_883_463_9).abs() < 1e-9);
        assert!(b.lower <= 109.0 && b.lower_applies && !b.upper_applies);
        let b = dusart_bounds(1e6);
        assert!(b.lower <= 78_498.0 && 78_498.0 <= b.upper);
        let b = dusart_bounds(355_991.0);
        assert!(b.lower_applies && b.upper_applies);
    }
}

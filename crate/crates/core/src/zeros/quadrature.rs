use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ZeroTable, ZerosError};

/// Largest `x` the quadrature accepts.
pub const QUADRATURE_MAX_X: f64 = 1.0e8;
/// Largest `zeros × nodes` product evaluated before refusing.
pub const QUADRATURE_COST_CAP: f64 = 4.0e9;
/// Points per Gauss–Legendre panel.
const GL_POINTS: usize = 16;
const MAX_DOUBLINGS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub x: f64,
    pub t: f64,
    pub delta: f64,
    /// Value at the finest resolution.
    pub value: f64,
    /// Value at half that resolution.
    pub coarse_value: f64,
    /// `|value − coarse_value| / |value|`.
    pub relative_change: f64,
    pub nodes: usize,
    pub zeros_used: usize,
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

struct Integrand {
    gammas: Vec<f64>,
    coeffs: Vec<Complex64>,
}

impl Integrand {
    fn new(gammas: &[f64], delta: f64) -> Self {
        let l = (1.0 + delta).ln();
        let coeffs = gammas
            .iter()
            .map(|&g| {
                let rho = Complex64::new(0.5, g);
                (Complex64::new(1.0, 0.0) - (rho * l).exp()) / rho
            })
            .collect();
        Self {
            gammas: gammas.to_vec(),
            coeffs,
        }
    }

    /// `|Σ_{|γ|<T} y^ρ C(ρ)|² = (2 Σ_{γ>0} Re(y^ρ C(ρ)))²` at `y = e^u`.
    fn at_log(&self, u: f64) -> f64 {
        let mut s = 0.0;
        for (g, c) in self.gammas.iter().zip(&self.coeffs) {
            let (sin, cos) = (g * u).sin_cos();
            s += c.re * cos - c.im * sin;
        }
        let s = 2.0 * (0.5 * u).exp() * s;
        s * s
    }

    /// Composite rule in `u = log y` over `[log x, log 2x]` with `panels`
    /// panels.
    fn integrate(&self, x: f64, panels: usize, rule: &[(f64, f64)]) -> f64 {
        let (a, b) = (x.ln(), (2.0 * x).ln());
        let h = (b - a) / panels as f64;
        let parts: Vec<f64> = (0..panels)
            .into_par_iter()
            .map(|p| {
                let mid = a + (p as f64 + 0.5) * h;
                rule.iter()
                    .map(|&(xi, w)| {
                        let u = mid + 0.5 * h * xi;
                        w * self.at_log(u) * u.exp()
                    })
                    .sum::<f64>()
                    * 0.5
                    * h
            })
            .collect();
        parts.iter().sum()
    }
}

/// `∫_x^{2x} |Σ_{|γ|<T} y^ρ C(ρ)|² dy` with `C(ρ) = (1 − (1 + δ)^ρ) / ρ`,
/// by composite Gauss–Legendre with panel doubling until two successive
/// values agree to `tol` (relative).
pub fn integral_i_quadrature(
    x: f64,
    t: f64,
    delta: f64,
    zeros: &ZeroTable,
    tol: f64,
) -> Result<QuadratureResult, ZerosError> {
    quadrature_with_cap(x, t, delta, zeros, tol, QUADRATURE_COST_CAP)
}

fn quadrature_with_cap(
    x: f64,
    t: f64,
    delta: f64,
    zeros: &ZeroTable,
    tol: f64,
    cap: f64,
) -> Result<QuadratureResult, ZerosError> {
    if !(x > 1.0 && x <= QUADRATURE_MAX_X) {
        return Err(ZerosError::Domain(format!(
            "quadrature needs 1 < x <= {QUADRATURE_MAX_X:e}, got {x}"
        )));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(ZerosError::Domain(format!("delta = {delta} outside (0, 1]")));
    }
    if !(tol > 0.0) {
        return Err(ZerosError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if t > zeros.max_ordinate() {
        return Err(ZerosError::InsufficientData {
            t,
            max_ordinate: zeros.max_ordinate(),
        });
    }
    let gammas = zeros.below(t);
    let f = Integrand::new(gammas, delta);
    let rule = gauss_legendre(GL_POINTS);
    // about one panel per half period of the fastest term
    let mut panels = ((t * std::f64::consts::LN_2 / std::f64::consts::PI).ceil() as usize).max(4);
    let cost = |panels: usize| (gammas.len().max(1) * panels * GL_POINTS) as f64;
    let refuse = |panels: usize| {
        let c = cost(panels);
        ZerosError::CostCap {
            cost: c,
            cap,
            suggested_t: t * (cap / c).sqrt() * 0.9,
        }
    };
    if cost(2 * panels) > cap {
        return Err(refuse(2 * panels));
    }
    let mut coarse = f.integrate(x, panels, &rule);
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        if cost(panels) > cap {
            return Err(refuse(panels));
        }
        let fine = f.integrate(x, panels, &rule);
        let change = if fine == 0.0 {
            (fine - coarse).abs()
        } else {
            ((fine - coarse) / fine).abs()
        };
        if change <= tol {
            return Ok(QuadratureResult {
                x,
                t,
                delta,
                value: fine,
                coarse_value: coarse,
                relative_change: change,
                nodes: panels * GL_POINTS,
                zeros_used: gammas.len(),
            });
        }
        coarse = fine;
    }
    Err(ZerosError::Domain(format!(
        "quadrature did not settle to {tol} after {MAX_DOUBLINGS} doublings"
    )))
}

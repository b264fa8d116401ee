use serde::{Deserialize, Serialize};

use super::{sieve_gaps, PrimesError};
use crate::analytic::{dusart_bounds, DUSART_LOWER_FROM, DUSART_UPPER_FROM};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DusartPoint {
    pub x: u64,
    pub pi: u64,
    pub lower: f64,
    pub upper: Option<f64>,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

/// Dusart's bounds for π(x) checked on a logarithmic grid and, exhaustively,
/// at the worst integer of every interval between consecutive primes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DusartSweep {
    pub limit: u64,
    pub grid: Vec<DusartPoint>,
    /// Intervals `[p_k, p_{k+1})` inspected by the exhaustive pass.
    pub intervals_checked: u64,
    pub lower_violations: Vec<u64>,
    pub upper_violations: Vec<u64>,
}

impl DusartSweep {
    pub fn pass(&self) -> bool {
        self.lower_violations.is_empty()
            && self.upper_violations.is_empty()
            && self.grid.iter().all(|p| p.lower_ok && p.upper_ok)
    }
}

fn log_grid(lo: u64, hi: u64, points: usize) -> Vec<u64> {
    if points < 2 || hi <= lo {
        return vec![lo.min(hi)];
    }
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut out: Vec<u64> = (0..points)
        .map(|i| {
            let x = (a + (b - a) * i as f64 / (points - 1) as f64).exp().round() as u64;
            x.clamp(lo, hi)
        })
        .collect();
    out.dedup();
    out
}

fn point(x: u64, pi: u64) -> DusartPoint {
    let b = dusart_bounds(x as f64);
    let lower_ok = (pi as f64) >= b.lower;
    let upper_ok = !b.upper_applies || (pi as f64) <= b.upper;
    DusartPoint {
        x,
        pi,
        lower: b.lower,
        upper: b.upper_applies.then_some(b.upper),
        lower_ok,
        upper_ok,
    }
}

/// Streams the primes up to `limit` once.
pub fn dusart_sweep(limit: u64, grid_points: usize) -> Result<DusartSweep, PrimesError> {
    let lo = DUSART_LOWER_FROM as u64;
    if limit < lo {
        return Err(PrimesError::Domain(format!(
            "Dusart sweep needs limit >= {lo}, got {limit}"
        )));
    }
    let grid_x = log_grid(lo, limit, grid_points);
    let mut grid = Vec::with_capacity(grid_x.len());
    let mut gi = 0;
    let mut count = 0u64;
    let mut intervals = 0u64;
    let mut lower_violations = Vec::new();
    let mut upper_violations = Vec::new();

    // on [p_k, p_{k+1}) both bounds increase while pi stays k: the lower bound
    // is tightest at p_{k+1} - 1, the upper one at p_k
    let mut check_interval = |pk: u64, k: u64, end: u64| {
        if end < lo {
            return;
        }
        intervals += 1;
        let b = dusart_bounds(end as f64);
        if (k as f64) < b.lower {
            lower_violations.push(end);
        }
        let start = pk.max(lo);
        if start as f64 >= DUSART_UPPER_FROM {
            let b = dusart_bounds(start as f64);
            if (k as f64) > b.upper {
                upper_violations.push(start);
            }
        }
    };

    let mut prev = 0u64;
    for rec in sieve_gaps(limit)? {
        let p = rec.prime;
        while gi < grid_x.len() && grid_x[gi] < p {
            grid.push(point(grid_x[gi], count));
            gi += 1;
        }
        if count > 0 {
            check_interval(prev, count, p - 1);
        }
        count += 1;
        prev = p;
    }
    check_interval(prev, count, limit);
    while gi < grid_x.len() {
        grid.push(point(grid_x[gi], count));
        gi += 1;
    }
    Ok(DusartSweep {
        limit,
        grid,
        intervals_checked: intervals,
        lower_violations,
        upper_violations,
    })
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::DpgError;
use crate::primes::PrimeTable;

/// Outcome of one DPG step together with the sufficient inequality
/// `N·(p_{n+1} − p_n) + 2·Σ_{gaps > N} gap < p_n` over `PD_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpgCertificate {
    pub n: u64,
    /// `p_{n+1} − p_n`.
    pub gap: u64,
    /// Size of the matching found in `G_n` (absent for witness-only runs).
    pub matching_size: Option<u64>,
    /// The first passing `N`, if any.
    pub witness_n: Option<u64>,
    /// Sides at `witness_n`, or at the `N` minimizing the left side when no
    /// `N` passes.
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

/// `(lhs, rhs)` of the inequality for a given `N`.
pub fn inequality_sides(histogram: &BTreeMap<u64, u64>, p_n: u64, gap: u64, big_n: u64) -> (u64, u64) {
    let tail: u64 = histogram
        .range(big_n.saturating_add(1)..)
        .map(|(g, c)| g * c)
        .sum();
    (big_n * gap + 2 * tail, p_n)
}

/// Searches `N` over the distinct gap values `>= 2` of `PD_n`, ascending.
///
/// Between consecutive gap values the tail sum is constant and `N·gap`
/// grows, so the left side is minimized at gap values and restricting the
/// search to them loses no witness.
pub fn search_witness(histogram: &BTreeMap<u64, u64>, n: u64, p_n: u64, gap: u64) -> DpgCertificate {
    let total: u64 = histogram.iter().map(|(g, c)| g * c).sum();
    let mut tail = total;
    let mut best: Option<(u64, u64)> = None;
    for (&value, &count) in histogram.iter() {
        // tail = Σ of gaps > value
        tail -= value * count;
        if value < 2 {
            continue;
        }
        let lhs = value * gap + 2 * tail;
        if lhs < p_n {
            return DpgCertificate {
                n,
                gap,
                matching_size: None,
                witness_n: Some(value),
                lhs,
                rhs: p_n,
                pass: true,
            };
        }
        if best.is_none_or(|(_, b)| lhs < b) {
            best = Some((value, lhs));
        }
    }
    DpgCertificate {
        n,
        gap,
        matching_size: None,
        witness_n: None,
        lhs: best.map_or(0, |(_, l)| l),
        rhs: p_n,
        pass: false,
    }
}

/// Certificate for `n` computed from a fresh sieve.
pub fn dpg_inequality_witness(n: u64) -> Result<DpgCertificate, DpgError> {
    if n < 3 {
        return Err(DpgError::Domain(format!("witness search needs n >= 3, got {n}")));
    }
    let table = PrimeTable::with_prime_count(n + 1);
    witness_from_table(&table, n)
}

pub fn witness_from_table(table: &PrimeTable, n: u64) -> Result<DpgCertificate, DpgError> {
    let (p_n, gap) = match (table.prime(n), table.gap(n + 1)) {
        (Some(p), Some(g)) => (p, g),
        _ => {
            return Err(DpgError::Domain(format!(
                "prime table up to {} does not reach p_{}",
                table.limit(),
                n + 1
            )))
        }
    };
    let mut hist = BTreeMap::new();
    for l in 1..=n {
        *hist.entry(table.gap(l).expect("l <= n")).or_insert(0) += 1;
    }
    Ok(search_witness(&hist, n, p_n, gap))
}

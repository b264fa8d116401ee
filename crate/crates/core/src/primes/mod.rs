//! Primes and prime gaps: a segmented sieve producing the gap stream, plus
//! the arithmetic statistics built on it (ψ, π, maximal gaps, k_N and S_N).
//!
//! Gap indexing follows the convention `p_0 = 1`, so the sequence of the
//! first `n` gaps is `(1, 1, 2, 2, 4, 2, ...)` and sums to `p_n - 1`.

mod cache;
mod dusart;
mod sieve;
mod table;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cache::{read_gap_cache, write_gap_cache, GapCache, CACHE_MAGIC};
pub use dusart::{dusart_sweep, DusartPoint, DusartSweep};
pub use sieve::{primes_up_to, sieve_gaps, Checkpoint, GapStream, SEGMENT_BITS};
pub use table::{k_and_s, max_gap, nth_prime_upper_bound, pi, psi, PrimeTable};

/// One entry of the prime gap sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    /// `l >= 1`.
    pub index: u64,
    /// `p_l`.
    pub prime: u64,
    /// `p_l - p_{l-1}`.
    pub gap: u64,
}

/// Gap statistics up to `x`, indexed by gaps `p_{l+1} - p_l` that start at a
/// prime `p_l <= x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapStats {
    pub x: u64,
    pub max_gap: u64,
    /// `N -> #{l : p_l <= x, gap >= N}`.
    pub k_n: BTreeMap<u64, u64>,
    /// `N -> sum of gaps > N`.
    pub s_n: BTreeMap<u64, u64>,
    /// gap value -> number of occurrences.
    pub histogram: BTreeMap<u64, u64>,
}

impl GapStats {
    /// Builds the statistics from a histogram of forward gaps.
    pub fn from_histogram(x: u64, histogram: BTreeMap<u64, u64>, n_values: &[u64]) -> Self {
        let max_gap = histogram.keys().next_back().copied().unwrap_or(0);
        let mut k_n = BTreeMap::new();
        let mut s_n = BTreeMap::new();
        for &n in n_values {
            let k = histogram.range(n..).map(|(_, c)| c).sum();
            let s = histogram
                .range(n.saturating_add(1)..)
                .map(|(g, c)| g * c)
                .sum();
            k_n.insert(n, k);
            s_n.insert(n, s);
        }
        Self {
            x,
            max_gap,
            k_n,
            s_n,
            histogram,
        }
    }
}

#[derive(Debug, Error)]
pub enum PrimesError {
    #[error("sieve limit {limit} is below 2, no primes to emit")]
    EmptyRange { limit: u64 },
    #[error("x = {x} needs primes up to {needed} but the table stops at {limit}")]
    OutOfRange { x: u64, needed: u64, limit: u64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("gap cache: {0}")]
    Cache(String),
    #[error("gap cache checksum mismatch (file is corrupted)")]
    CacheChecksum,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

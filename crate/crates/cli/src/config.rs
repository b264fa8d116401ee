use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use gapgraph::primes::{read_gap_cache, sieve_gaps, write_gap_cache, GapCache};
use serde::{Deserialize, Serialize};

/// Directory holding `gaps.bin`; overrides the default under `out_dir`.
pub const CACHE_ENV: &str = "GAPGRAPH_CACHE_DIR";
pub const CACHE_FILE: &str = "gaps.bin";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Sieve limit for the gap cache and the Dusart sweep.
    pub limit: u64,
    /// Largest `n` for the graphicality sweep.
    pub max_n: u64,
    /// Last `n` of the DPG run (capped at `max_n`).
    pub dpg_end: u64,
    pub seed: u64,
    pub zeros_path: Option<PathBuf>,
    pub out_dir: PathBuf,
    /// Explicit cache directory; otherwise `$GAPGRAPH_CACHE_DIR`, then
    /// `out_dir/cache`.
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    /// Bisection tolerance in t for the threshold reports.
    pub threshold_tol: f64,
    /// Points of the Dusart log grid.
    pub dusart_grid: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            limit: 2_000_000,
            max_n: 100_000,
            dpg_end: 10_000,
            seed: 42,
            zeros_path: None,
            out_dir: PathBuf::from("gapgraph-out"),
            cache_dir: None,
            threshold_tol: 1e-3,
            dusart_grid: 10_000,
        }
    }
}

impl RunConfig {
    pub fn cache_dir(&self) -> PathBuf {
        if let Some(d) = &self.cache_dir {
            return d.clone();
        }
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => PathBuf::from(d),
            _ => self.out_dir.join("cache"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n < 1 {
            bail!("max_n must be at least 1");
        }
        if self.limit < 599 {
            bail!("limit must be at least 599 for the Dusart sweep, got {}", self.limit);
        }
        if !(self.threshold_tol > 0.0 && self.threshold_tol < 1.0) {
            bail!("threshold tolerance must lie in (0, 1), got {}", self.threshold_tol);
        }
        if self.dusart_grid < 2 {
            bail!("the Dusart grid needs at least 2 points");
        }
        Ok(())
    }
}

/// Reads `gaps.bin` from `dir`, or sieves and writes it when it is missing
/// or covers less than `limit`. A corrupted file is an error, not a rebuild.
pub fn load_or_build_gaps(dir: &Path, limit: u64) -> Result<GapCache> {
    let path = dir.join(CACHE_FILE);
    if path.exists() {
        let cache = read_gap_cache(&path).with_context(|| format!("reading {}", path.display()))?;
        if cache.limit >= limit {
            return Ok(cache);
        }
    }
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let gaps = sieve_gaps(limit)?.map(|r| r.gap).collect();
    let cache = GapCache { limit, gaps };
    write_gap_cache(&path, &cache).with_context(|| format!("writing {}", path.display()))?;
    Ok(cache)
}

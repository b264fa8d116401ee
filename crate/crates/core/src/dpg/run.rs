use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{dpg_step, search_witness, DpgCertificate, DpgError, DpgState};
use crate::graphic::DegreeMultiset;
use crate::primes::{nth_prime_upper_bound, sieve_gaps, GapRecord, GapStream};

/// DPG growth from `PD_start` to `PD_end` along the prime gap stream,
/// yielding one certificate per step.
pub struct DpgRun {
    state: DpgState,
    stream: GapStream,
    end: u64,
    rng: ChaCha8Rng,
    histogram: BTreeMap<u64, u64>,
    /// `p_n` for the current state.
    prime: u64,
    /// Record for `n + 1`, read ahead.
    pending: Option<GapRecord>,
    failed: bool,
}

impl DpgRun {
    pub fn state(&self) -> &DpgState {
        &self.state
    }

    pub fn into_state(self) -> DpgState {
        self.state
    }

    /// Current `PD_n` as a multiset.
    pub fn sequence(&self) -> DegreeMultiset {
        let mut m = DegreeMultiset::new();
        for (&g, &c) in &self.histogram {
            m.insert_many(g, c);
        }
        m
    }

    fn advance(&mut self) -> Result<DpgCertificate, DpgError> {
        let rec = self.pending.take().ok_or_else(|| {
            DpgError::Domain(format!("gap stream ended at n = {}", self.state.n()))
        })?;
        let n = self.state.n();
        let mut cert = search_witness(&self.histogram, n, self.prime, rec.gap);
        self.state.set_next_gap(rec.gap);
        let outcome = dpg_step(&mut self.state, &mut self.rng)?;
        cert.matching_size = Some(outcome.matching_size as u64);
        *self.histogram.entry(rec.gap).or_insert(0) += 1;
        self.prime = rec.prime;
        if self.state.n() < self.end {
            self.pending = self.stream.next();
        }
        Ok(cert)
    }
}

impl Iterator for DpgRun {
    type Item = Result<DpgCertificate, DpgError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.state.n() >= self.end {
            return None;
        }
        let out = self.advance();
        self.failed = out.is_err();
        Some(out)
    }
}

/// Realizes `PD_start` by Havel–Hakimi and prepares the steps up to
/// `PD_end`; deterministic for a given seed.
pub fn dpg_run(start: u64, end: u64, seed: u64) -> Result<DpgRun, DpgError> {
    if !(2 <= start && start < end) {
        return Err(DpgError::Domain(format!(
            "need 2 <= start < end, got start = {start}, end = {end}"
        )));
    }
    let mut stream = sieve_gaps(nth_prime_upper_bound(end))?;
    let mut histogram = BTreeMap::new();
    let mut prime = 0;
    for _ in 0..start {
        let rec = stream.next().ok_or_else(|| DpgError::Domain("gap stream too short".into()))?;
        *histogram.entry(rec.gap).or_insert(0) += 1;
        prime = rec.prime;
    }
    let seq: DegreeMultiset = histogram
        .iter()
        .flat_map(|(&g, &c)| std::iter::repeat_n(g, c as usize))
        .collect();
    let state = DpgState::from_sequence(&seq, None)?;
    let pending = stream.next();
    Ok(DpgRun {
        state,
        stream,
        end,
        rng: ChaCha8Rng::seed_from_u64(seed),
        histogram,
        prime,
        pending,
        failed: false,
    })
}

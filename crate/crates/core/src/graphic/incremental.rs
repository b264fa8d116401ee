use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{erdos_gallai_full, zz_tv_reduced, DegreeMultiset, GraphicError, GraphicVerdict};
use crate::primes::{nth_prime_upper_bound, sieve_gaps, GapRecord};

/// Maintains `PD_n` as gap records arrive and tests each prefix.
#[derive(Debug, Clone, Default)]
pub struct PdVerifier {
    seq: DegreeMultiset,
    n: u64,
}

impl PdVerifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn multiset(&self) -> &DegreeMultiset {
        &self.seq
    }

    /// Consumes gap `n + 1` and returns the verdict for the extended prefix.
    pub fn push(&mut self, rec: GapRecord) -> Result<GraphicVerdict, GraphicError> {
        if rec.index != self.n + 1 {
            return Err(GraphicError::Sequencing {
                expected: self.n + 1,
                got: rec.index,
            });
        }
        self.seq.insert(rec.gap);
        self.n += 1;
        Ok(zz_tv_reduced(&self.seq))
    }
}

/// Verdicts `(n, PD_n)` for `n = 1 ..= max_n` from a gap stream.
pub fn incremental_pd_verifier<I>(
    gaps: I,
    max_n: u64,
) -> impl Iterator<Item = Result<(u64, GraphicVerdict), GraphicError>>
where
    I: IntoIterator<Item = GapRecord>,
{
    let mut verifier = PdVerifier::new();
    let mut failed = false;
    gaps.into_iter()
        .take_while(move |r| r.index <= max_n)
        .map_while(move |rec| {
            if failed {
                return None;
            }
            let out = verifier.push(rec).map(|v| (verifier.n(), v));
            failed = out.is_err();
            Some(out)
        })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_n: u64,
    pub checked: u64,
    /// `n >= 2` with a non-graphic `PD_n`.
    pub failing: Vec<u64>,
    pub pd1_graphic: bool,
    /// `n` values re-checked with the full Erdős–Gallai test.
    pub spot_checks: Vec<u64>,
    pub spot_check_mismatches: Vec<u64>,
    pub largest_m: u64,
    pub distinct_gaps: usize,
    pub seconds: f64,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.checked == self.max_n && self.failing.is_empty() && self.spot_check_mismatches.is_empty()
    }
}

/// Tests every `PD_n`, `n <= max_n`, with the reduced criterion and
/// re-checks `spot_checks` random `n` (chosen from `seed`) with the full one.
pub fn graphic_sweep(max_n: u64, spot_checks: usize, seed: u64) -> Result<SweepReport, GraphicError> {
    if max_n < 1 {
        return Err(GraphicError::Domain("max_n must be at least 1".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spots: Vec<u64> = sample(&mut rng, max_n as usize, spot_checks.min(max_n as usize))
        .into_iter()
        .map(|i| i as u64 + 1)
        .collect();
    spots.sort_unstable();
    let stream = sieve_gaps(nth_prime_upper_bound(max_n)).map_err(GraphicError::Primes)?;

    let mut report = SweepReport {
        max_n,
        checked: 0,
        failing: Vec::new(),
        pd1_graphic: false,
        spot_checks: spots.clone(),
        spot_check_mismatches: Vec::new(),
        largest_m: 0,
        distinct_gaps: 0,
        seconds: 0.0,
    };
    let mut verifier = PdVerifier::new();
    let mut next_spot = spots.iter().peekable();
    for rec in stream.take_while(|r| r.index <= max_n) {
        let v = verifier.push(rec)?;
        let n = verifier.n();
        report.checked = n;
        report.largest_m = report.largest_m.max(v.m);
        if n == 1 {
            report.pd1_graphic = v.graphic;
        } else if !v.graphic {
            report.failing.push(n);
        }
        if next_spot.peek() == Some(&&n) {
            next_spot.next();
            if erdos_gallai_full(verifier.multiset()).graphic != v.graphic {
                report.spot_check_mismatches.push(n);
            }
        }
    }
    report.distinct_gaps = verifier.multiset().distinct();
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

//! Segmented odd-only sieve of Eratosthenes.
//!
//! Segment `s` covers the odd integers in `[s * SPAN, (s + 1) * SPAN)` where
//! `SPAN = 2 * SEGMENT_BITS`. Bit `i` of a segment stands for the odd number
//! `s * SPAN + 2i + 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{GapRecord, PrimesError};

/// Odd candidates per segment.
pub const SEGMENT_BITS: usize = 1 << 20;
const SPAN: u64 = 2 * SEGMENT_BITS as u64;
const WORDS: usize = SEGMENT_BITS / 64;

/// Odd primes up to `bound` by a plain sieve. Used to seed the segments.
pub(crate) fn base_primes(bound: u64) -> Vec<u32> {
    let bound = bound as usize;
    if bound < 3 {
        return Vec::new();
    }
    // index i <-> 2i + 1
    let len = (bound - 1) / 2 + 1;
    let mut composite = vec![false; len];
    let mut out = Vec::new();
    for i in 1..len {
        if composite[i] {
            continue;
        }
        let p = 2 * i + 1;
        out.push(p as u32);
        let mut j = (p * p - 1) / 2;
        while j < len {
            composite[j] = true;
            j += p;
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Number of segments needed to cover `[0, limit]`.
pub(crate) fn segment_count(limit: u64) -> u64 {
    limit / SPAN + 1
}

/// Odd primes of segment `seg` that are `<= limit`, ascending. Does not
/// include 2.
pub(crate) fn sieve_segment(seg: u64, limit: u64, base: &[u32]) -> Vec<u64> {
    let lo = seg * SPAN;
    if lo > limit {
        return Vec::new();
    }
    let hi = (lo + SPAN - 1).min(limit);
    let mut bits = vec![0u64; WORDS];
    for &p in base {
        let p = p as u64;
        let sq = p * p;
        if sq > hi {
            break;
        }
        // first odd multiple of p that is >= max(p^2, lo)
        let mut start = if sq >= lo { sq } else { lo.div_ceil(p) * p };
        if start % 2 == 0 {
            start += p;
        }
        let mut idx = ((start - lo) / 2) as usize;
        let step = p as usize;
        while idx < SEGMENT_BITS {
            bits[idx >> 6] |= 1 << (idx & 63);
            idx += step;
        }
    }
    if seg == 0 {
        // 1 is not prime
        bits[0] |= 1;
    }
    let last = ((hi - lo) / 2) as usize;
    let mut out = Vec::with_capacity(SEGMENT_BITS / 8);
    for (w, &word) in bits.iter().enumerate() {
        let base_idx = w * 64;
        if base_idx > last {
            break;
        }
        let mut free = !word;
        while free != 0 {
            let tz = free.trailing_zeros() as usize;
            let idx = base_idx + tz;
            if idx > last {
                break;
            }
            let n = lo + 2 * idx as u64 + 1;
            if n <= hi {
                out.push(n);
            }
            free &= free - 1;
        }
    }
    out
}

/// All primes `<= limit`, ascending. Segments are sieved in parallel and
/// concatenated in order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let base = base_primes(isqrt(limit));
    let segments: Vec<Vec<u64>> = (0..segment_count(limit))
        .into_par_iter()
        .map(|s| sieve_segment(s, limit, &base))
        .collect();
    let total: usize = segments.iter().map(Vec::len).sum();
    let mut out = Vec::with_capacity(total + 1);
    out.push(2);
    for seg in segments {
        out.extend(seg);
    }
    out
}

/// State of a [`GapStream`] at the start of a segment. Feeding it back to
/// [`GapStream::resume`] replays the stream from that segment on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub segment: u64,
    /// Index of the last record emitted before the segment.
    pub index: u64,
    /// Prime of the last record emitted before the segment (1 before the
    /// first record).
    pub prev_prime: u64,
}

/// Streaming producer of the gap records `(l, p_l, p_l - p_{l-1})` with the
/// convention `p_0 = 1`.
#[derive(Debug, Clone)]
pub struct GapStream {
    limit: u64,
    base: Vec<u32>,
    next_segment: u64,
    buffer: Vec<u64>,
    pos: usize,
    index: u64,
    prev: u64,
    boundary: Checkpoint,
    emitted_two: bool,
}

impl GapStream {
    pub fn new(limit: u64) -> Result<Self, PrimesError> {
        Self::resume(
            limit,
            Checkpoint {
                segment: 0,
                index: 0,
                prev_prime: 1,
            },
        )
    }

    pub fn resume(limit: u64, at: Checkpoint) -> Result<Self, PrimesError> {
        if limit < 2 {
            return Err(PrimesError::EmptyRange { limit });
        }
        Ok(Self {
            limit,
            base: base_primes(isqrt(limit)),
            next_segment: at.segment,
            buffer: Vec::new(),
            pos: 0,
            index: at.index,
            prev: at.prev_prime,
            boundary: at,
            emitted_two: at.index > 0,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Checkpoint of the segment currently being emitted.
    pub fn checkpoint(&self) -> Checkpoint {
        self.boundary
    }

    fn emit(&mut self, p: u64) -> GapRecord {
        self.index += 1;
        let rec = GapRecord {
            index: self.index,
            prime: p,
            gap: p - self.prev,
        };
        self.prev = p;
        rec
    }
}

impl Iterator for GapStream {
    type Item = GapRecord;

    fn next(&mut self) -> Option<GapRecord> {
        if !self.emitted_two {
            self.emitted_two = true;
            return Some(self.emit(2));
        }
        while self.pos >= self.buffer.len() {
            if self.next_segment >= segment_count(self.limit) {
                return None;
            }
            self.boundary = Checkpoint {
                segment: self.next_segment,
                index: self.index,
                prev_prime: self.prev,
            };
            self.buffer = sieve_segment(self.next_segment, self.limit, &self.base);
            self.pos = 0;
            self.next_segment += 1;
        }
        let p = self.buffer[self.pos];
        self.pos += 1;
        Some(self.emit(p))
    }
}

/// Gap records for every prime `<= limit`.
pub fn sieve_gaps(limit: u64) -> Result<GapStream, PrimesError> {
    GapStream::new(limit)
}

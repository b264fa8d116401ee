//! On-disk gap cache.
//!
//! Layout: the magic `PGG1`, the sieve limit as a little-endian `u64`, the
//! gaps `p_l - p_{l-1}` (l = 1, 2, ...) as LEB128 varints, then a 32-byte
//! SHA-256 of everything before it.

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::PrimesError;

pub const CACHE_MAGIC: &[u8; 4] = b"PGG1";
const HEADER_LEN: usize = 12;
const DIGEST_LEN: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCache {
    pub limit: u64,
    pub gaps: Vec<u64>,
}

impl GapCache {
    /// Primes `p_1, p_2, ...` reconstructed from the gaps.
    pub fn primes(&self) -> Vec<u64> {
        let mut p = 1;
        self.gaps
            .iter()
            .map(|g| {
                p += g;
                p
            })
            .collect()
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.gaps.len() + DIGEST_LEN);
        out.extend_from_slice(CACHE_MAGIC);
        out.extend_from_slice(&self.limit.to_le_bytes());
        for &g in &self.gaps {
            let mut v = g;
            loop {
                let byte = (v & 0x7f) as u8;
                v >>= 7;
                if v == 0 {
                    out.push(byte);
                    break;
                }
                out.push(byte | 0x80);
            }
        }
        let digest = Sha256::digest(&out);
        out.extend_from_slice(digest.as_slice());
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, PrimesError> {
        if bytes.len() < HEADER_LEN + DIGEST_LEN {
            return Err(PrimesError::Cache(format!(
                "file too short ({} bytes)",
                bytes.len()
            )));
        }
        if &bytes[..4] != CACHE_MAGIC {
            return Err(PrimesError::Cache("bad magic".into()));
        }
        let (body, digest) = bytes.split_at(bytes.len() - DIGEST_LEN);
        if Sha256::digest(body).as_slice() != digest {
            return Err(PrimesError::CacheChecksum);
        }
        let limit = u64::from_le_bytes(body[4..12].try_into().unwrap());
        let mut gaps = Vec::new();
        let mut value = 0u64;
        let mut shift = 0u32;
        for &b in &body[HEADER_LEN..] {
            if shift >= 64 {
                return Err(PrimesError::Cache("varint overflow".into()));
            }
            value |= u64::from(b & 0x7f) << shift;
            if b & 0x80 == 0 {
                gaps.push(value);
                value = 0;
                shift = 0;
            } else {
                shift += 7;
            }
        }
        if shift != 0 {
            return Err(PrimesError::Cache("truncated varint".into()));
        }
        Ok(Self { limit, gaps })
    }
}

pub fn write_gap_cache(path: &Path, cache: &GapCache) -> Result<(), PrimesError> {
    fs::write(path, cache.encode())?;
    Ok(())
}

pub fn read_gap_cache(path: &Path) -> Result<GapCache, PrimesError> {
    GapCache::decode(&fs::read(path)?)
}

use std::path::Path;

use sha2::{Digest, Sha256};

use super::ZerosError;
use crate::analytic::H0;

const CHECKSUM_PREFIX: &str = "# sha256 of data lines:";

/// Positive ordinates `γ` of nontrivial zeta zeros, ascending, all below
/// the height where every zero is known to lie on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    /// Whether the file carried a checksum line that was verified.
    checksum_verified: bool,
}

impl ZeroTable {
    /// Validates ordering and range. `ordinates` must be non-empty.
    pub fn new(ordinates: Vec<f64>) -> Result<Self, ZerosError> {
        if ordinates.is_empty() {
            return Err(ZerosError::Empty);
        }
        for (i, &g) in ordinates.iter().enumerate() {
            check_value(i + 1, g)?;
            if i > 0 && g <= ordinates[i - 1] {
                return Err(ZerosError::Ordering {
                    line: i + 1,
                    previous: ordinates[i - 1],
                    value: g,
                });
            }
        }
        Ok(Self {
            ordinates,
            checksum_verified: false,
        })
    }

    /// Parses one ordinate per line; `#` lines are comments. A comment of the
    /// form `# sha256 of data lines: <hex>` is checked against the SHA-256 of
    /// the data lines (each trimmed and newline-terminated).
    pub fn parse(text: &str) -> Result<Self, ZerosError> {
        let mut ordinates = Vec::new();
        let mut expected_digest = None;
        let mut hasher = Sha256::new();
        let mut prev = f64::NEG_INFINITY;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            if let Some(rest) = l.strip_prefix(CHECKSUM_PREFIX) {
                expected_digest = Some(rest.trim().to_ascii_lowercase());
                continue;
            }
            if l.starts_with('#') {
                continue;
            }
            let g: f64 = l.parse().map_err(|_| ZerosError::Parse {
                line,
                message: format!("not a decimal number: {l:?}"),
            })?;
            check_value(line, g)?;
            if g <= prev {
                return Err(ZerosError::Ordering {
                    line,
                    previous: prev,
                    value: g,
                });
            }
            prev = g;
            hasher.update(l.as_bytes());
            hasher.update(b"\n");
            ordinates.push(g);
        }
        if ordinates.is_empty() {
            return Err(ZerosError::Empty);
        }
        let checksum_verified = match expected_digest {
            None => false,
            Some(want) => {
                let got: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
                if got != want {
                    return Err(ZerosError::Checksum { expected: want, found: got });
                }
                true
            }
        };
        Ok(Self {
            ordinates,
            checksum_verified,
        })
    }

    pub fn load(path: &Path) -> Result<Self, ZerosError> {
        let text = std::fs::read_to_string(path).map_err(|e| ZerosError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::parse(&text)
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn max_ordinate(&self) -> f64 {
        *self.ordinates.last().expect("table is non-empty")
    }

    pub fn checksum_verified(&self) -> bool {
        self.checksum_verified
    }

    /// Number of ordinates `< t`, i.e. `N(t)`.
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g < t)
    }

    /// Number of ordinates in the open interval `(a, b)`.
    pub fn count_between(&self, a: f64, b: f64) -> usize {
        let lo = self.ordinates.partition_point(|&g| g <= a);
        let hi = self.ordinates.partition_point(|&g| g < b);
        hi.saturating_sub(lo)
    }

    /// The ordinates `< t`.
    pub fn below(&self, t: f64) -> &[f64] {
        &self.ordinates[..self.count_below(t)]
    }

    /// A table keeping only ordinates `< t`.
    pub fn truncated(&self, t: f64) -> Result<Self, ZerosError> {
        Self::new(self.below(t).to_vec())
    }
}

fn check_value(line: usize, g: f64) -> Result<(), ZerosError> {
    if !(g.is_finite() && g > 0.0) {
        return Err(ZerosError::Parse {
            line,
            message: format!("ordinate {g} is not positive"),
        });
    }
    if g >= H0 {
        return Err(ZerosError::Parse {
            line,
            message: format!("ordinate {g} is not below the verified height {H0}"),
        });
    }
    Ok(())
}

/// Reads a zero file.
pub fn load_zeros(path: &Path) -> Result<ZeroTable, ZerosError> {
    ZeroTable::load(path)
}

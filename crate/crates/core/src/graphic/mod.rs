//! Graphicality of degree sequences: the full Erdős–Gallai test, the
//! reduced test over `k = m` and the descents below `m`, and an incremental
//! verifier over the prime gap stream.
//!
//! All arithmetic is integer; sequences are value -> count maps so each test
//! costs `O(#distinct values)` rather than `O(n)`.

mod criteria;
mod incremental;
mod multiset;

use thiserror::Error;

pub use criteria::{erdos_gallai_full, zz_tv_reduced, GraphicVerdict};
pub use incremental::{graphic_sweep, incremental_pd_verifier, PdVerifier, SweepReport};
pub use multiset::DegreeMultiset;

#[derive(Debug, Error)]
pub enum GraphicError {
    #[error("gap stream out of order: expected index {expected}, got {got}")]
    Sequencing { expected: u64, got: u64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Primes(#[from] crate::primes::PrimesError),
}

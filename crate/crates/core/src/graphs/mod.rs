//! Simple graphs, Havel–Hakimi realization, maximum matchings, and
//! exhaustive realization enumeration for small degree sequences.

mod matching;
mod realize;
mod simple;

use thiserror::Error;

pub use matching::{
    matching_of_size, matching_reaching, maximum_matching, maximum_matching_seeded,
    vizing_matching_bound,
};
pub use realize::{enumerate_realizations, havel_hakimi_realize, MAX_ENUMERATION_N};
pub use simple::{Matching, SimpleGraph};

#[derive(Debug, Error)]
pub enum GraphsError {
    #[error("sequence {sequence} is not graphic{}", failing_k.map(|k| format!(" (Erdős–Gallai fails at k = {k})")).unwrap_or_else(|| " (odd degree sum)".into()))]
    NotGraphic {
        sequence: String,
        failing_k: Option<u64>,
    },
    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("refusing to enumerate realizations of {n} vertices (limit {max})")]
    ScaleRefusal { n: u64, max: u64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

//! Degree-preserving growth along the prime gap sequence.
//!
//! A step inserts a vertex of even degree `2ν` by deleting `ν` independent
//! edges and joining the new vertex to their `2ν` endpoints, so every old
//! vertex keeps its degree and `G_n` realizing `PD_n` becomes `G_{n+1}`
//! realizing `PD_{n+1}`.

mod run;
mod state;
mod witness;

use thiserror::Error;

pub use run::{dpg_run, DpgRun};
pub use state::{dpg_step, DpgState, StepOutcome};
pub use witness::{
    dpg_inequality_witness, inequality_sides, search_witness, witness_from_table, DpgCertificate,
};

#[derive(Debug, Error)]
pub enum DpgError {
    #[error("gap {gap} at n = {n} is not an even number >= 2")]
    OddGap { n: u64, gap: u64 },
    #[error("DPG stuck at n = {n}: gap {gap} needs a matching of size {}, largest found {found}", gap / 2)]
    Stuck { n: u64, gap: u64, found: usize },
    #[error("degree of vertex {vertex} changed at n = {n}: expected {expected}, found {found}")]
    DegreeMismatch {
        n: u64,
        vertex: usize,
        expected: u64,
        found: u64,
    },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Graphs(#[from] crate::graphs::GraphsError),
    #[error(transparent)]
    Primes(#[from] crate::primes::PrimesError),
}

//! Prime gap sequences viewed as graph degree sequences.
//!
//! * [`primes`]: segmented sieve, the gap stream `PD_n` (with `p_0 = 1`),
//!   ψ, π and gap statistics.
//! * [`graphic`]: Erdős–Gallai and its reduced form over `k = m` and the
//!   descents below `m`.
//! * [`graphs`]: simple graphs, Havel–Hakimi, maximum matching, realization
//!   enumeration.
//! * [`dpg`]: degree-preserving growth along the prime gaps.
//! * [`analytic`]: explicit constants, bounds and threshold inequalities in
//!   log-domain arithmetic.
//! * [`zeros`]: checks driven by tables of zeta zero ordinates.

// range guards are written `!(a > b)` so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod certificate;
pub mod dpg;
pub mod graphic;
pub mod graphs;
pub mod primes;
pub mod zeros;

//! Subcommand implementations for the `gapgraph` binary.

pub mod commands;
pub mod config;
pub mod report;
pub mod verify;

pub use config::{RunConfig, CACHE_ENV};
pub use report::cmd_report;
pub use verify::cmd_verify_all;

/// Current time as RFC 3339 UTC, the only field expected to differ
/// between identical runs.
pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

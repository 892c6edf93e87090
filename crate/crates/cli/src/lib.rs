//! Command-line orchestration: walk a source tree, analyse it, write
//! summaries and optional IR and metric reports.

mod config;
mod refs;
mod run;
mod walk;

pub use config::{Args, ConfigError, OutputFormat, RunConfig};
pub use refs::{load_references, References};
pub use run::{execute, order_summaries, run, Outcome, RunError, RunSummary};
pub use walk::{walk_corpus, Walk, WalkError};

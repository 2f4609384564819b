//! Batch front end: parse a job, run it against the `toral` library and
//! emit a deterministic report.
//!
//! Exit codes: 0 on success, 2 when a catalog stays incomplete within the
//! budget (results are still emitted), 1 on errors.

mod job;
mod render;
mod run;

pub use job::{as_two_by_two, parse_job, parse_matrix, Command, Format, JobSpec, Options};
pub use render::render_ascii;
pub use run::{run, Report, Status, SCHEMA_VERSION};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Args(#[from] clap::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{}: {0}", .0.code())]
    Domain(#[from] toral::Error),
}

impl CliError {
    /// Help and version requests are not failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Args(e) if !e.use_stderr() => 0,
            _ => 1,
        }
    }
}

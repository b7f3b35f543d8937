//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by loaders, validators, schedulers, and the runtime.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input file. Line numbers are 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Input data violates a documented invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation was called outside its contract (bad index, inverted
    /// range, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A peer sent something the five-step protocol does not allow here.
    #[error("protocol error: {0}")]
    Protocol(String),

    /// A worker disconnected or failed before delivering its results. The
    /// listed ranges were assigned to it and never returned.
    #[error("worker {worker} aborted the run: {msg}; unfinished ranges: {}",
            format_ranges(.unfinished))]
    WorkerAborted {
        worker: usize,
        msg: String,
        unfinished: Vec<(usize, usize)>,
    },

    /// The expected set of workers did not connect in time.
    #[error("startup error: {0}")]
    Startup(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_ranges(ranges: &[(usize, usize)]) -> String {
    if ranges.is_empty() {
        return "none".to_string();
    }
    ranges
        .iter()
        .map(|(s, e)| format!("[{s}, {e})"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl Error {
    /// True for errors caused by bad input or bad call arguments, as opposed
    /// to failures that happened while a run was in flight.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::Validation(_) | Error::Usage(_)
        )
    }
}

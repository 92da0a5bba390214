//! Companion crate for `edgesum-core`: file formats, seeded instance
//! generators, wall-clock search budgets, and report rendering, shared by
//! the `edgesum` binary and its test suites.

pub mod budget;
pub mod dimacs;
pub mod gen;
pub mod json;
pub mod report;

use std::fmt;

/// Everything that can go wrong on the IO and generation side. Core-side
/// violations are wrapped so the binary can map every failure onto its
/// exit-code contract in one place.
#[derive(Debug)]
pub enum Error {
    /// Underlying file or stream failure.
    Io(std::io::Error),
    /// Structurally invalid JSON.
    Json(serde_json::Error),
    /// A line that does not fit the DIMACS .col subset.
    Dimacs { line: usize, message: String },
    /// The DIMACS header promised a different number of edges.
    EdgeCountMismatch { declared: usize, listed: usize },
    /// A generator spec string that does not parse.
    BadGenSpec { spec: String, reason: &'static str },
    /// A randomized generator gave up after its retry cap.
    GenerationFailed(&'static str),
    /// The invocation itself is malformed or missing a precondition.
    Usage(&'static str),
    /// Violation reported by the core library.
    Core(edgesum_core::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io(e) => write!(f, "io: {e}"),
            Error::Json(e) => write!(f, "json: {e}"),
            Error::Dimacs { line, message } => write!(f, "dimacs line {line}: {message}"),
            Error::EdgeCountMismatch { declared, listed } => write!(
                f,
                "edge count mismatch: header declares {declared} edges, found {listed}"
            ),
            Error::BadGenSpec { spec, reason } => write!(f, "bad generator spec {spec:?}: {reason}"),
            Error::GenerationFailed(what) => write!(f, "generation failed: {what}"),
            Error::Usage(what) => write!(f, "{what}"),
            Error::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            Error::Core(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

impl From<edgesum_core::Error> for Error {
    fn from(e: edgesum_core::Error) -> Self {
        Error::Core(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Corpus runner, reports and command-line surface.

pub mod commands;
pub mod corpus;
pub mod source;

use blockheight::blocktheory::BlockError;
use blockheight::chartable::CharTableError;
use blockheight::combinatorics::CombError;
use blockheight::permgroup::{PermGroupError, DEFAULT_CAP};
use blockheight::pgroups::PGroupError;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
/// An expectation failed or a verdict was a mismatch.
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_COMPUTE: i32 = 65;

pub const CAP_ENV: &str = "BLOCKHEIGHT_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error(transparent)]
    Group(#[from] PermGroupError),
    #[error(transparent)]
    Table(#[from] CharTableError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    PGroup(#[from] PGroupError),
    #[error(transparent)]
    Comb(#[from] CombError),
}

/// Machine-readable form of an error, printed to stderr.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_COMPUTE,
        }
    }

    pub fn record(&self) -> ErrorRecord {
        let kind = match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Group(_) => "group",
            CliError::Table(_) => "character-table",
            CliError::Block(_) => "block",
            CliError::PGroup(_) => "p-group",
            CliError::Comb(_) => "combinatorics",
        };
        ErrorRecord {
            kind,
            message: self.to_string(),
        }
    }
}

/// `--cap`, then `BLOCKHEIGHT_CAP`, then the library default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV}={v:?} is not a positive integer"))),
        None => Ok(DEFAULT_CAP),
    }
}

//! File formats and the built-in fixture registry for the `qnd` tool.
//!
//! Quandle files (`.qnd`): first line the order `n`, then `n` lines of `n`
//! space-separated 0-based entries, entry `j` of body line `i` being
//! `i ◁ j`. Hom files (`.qhom`): first line `n_dom n_cod`, second line the
//! `n_dom` images. `#` starts a comment in both; the trailing newline is
//! required. Serialization is canonical: parse ∘ serialize is the identity
//! on canonical text.

pub mod fixtures;
pub mod formats;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Core(#[from] qnd_core::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

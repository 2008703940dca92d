// SPDX-License-Identifier: MIT OR Apache-2.0

//! Command-line front end for `atilde-core`.
//!
//! The binary is a thin wrapper around the functions here, which parse
//! arguments, run queries and produce JSON, text and SVG output.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod json;
pub mod svg;
pub mod verify;

use std::ops::RangeInclusive;
use std::path::PathBuf;

use atilde_core::Root;

/// Everything that can go wrong in the front end.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A root on the command line did not parse.
    #[error("invalid root {input:?}: {reason}")]
    BadRoot {
        /// The offending text.
        input: String,
        /// What was wrong.
        reason: String,
    },
    /// A rank range did not parse.
    #[error("invalid range {0:?}: expected N, A..B or A..=B")]
    BadRange(String),
    /// Error from the core library.
    #[error(transparent)]
    Core(#[from] atilde_core::Error),
    /// Output could not be written.
    #[error("cannot write {path}: {source}")]
    Io {
        /// Target path.
        path: PathBuf,
        /// Underlying error.
        source: std::io::Error,
    },
    /// JSON encoding failed.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parses a comma-separated root such as `1,2,1`.
pub fn parse_root(s: &str) -> Result<Root, CliError> {
    let bad = |reason: String| CliError::BadRoot { input: s.to_string(), reason };
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| bad(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Root::new(parts).map_err(|e| bad(e.to_string()))
}

/// Parses `N`, `A..B` (inclusive) or `A..=B`. A range with `A > B` is
/// empty.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::BadRange(s.to_string());
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_parse() {
        assert_eq!(parse_root("1,2,1").unwrap().components(), &[1, 2, 1]);
        assert_eq!(parse_root(" 2, 2,1 ,1").unwrap().n(), 4);
        assert!(parse_root("1,2").is_err());
        assert!(parse_root("1,x,1").is_err());
        assert!(parse_root("").is_err());
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..3").unwrap().is_empty());
        assert!(parse_range("a..3").is_err());
    }
}

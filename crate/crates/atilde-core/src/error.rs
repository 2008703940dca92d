// SPDX-License-Identifier: MIT OR Apache-2.0

//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Roots and quivers need at least three vertices.
    #[error("rank {0} is too small, need n >= 3")]
    RankTooSmall(usize),
    /// A reflection or vertex index outside `1..=n`.
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange {
        /// Offending index.
        index: usize,
        /// Rank.
        n: usize,
    },
    /// Two objects of different rank were combined.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    /// Parameters do not describe a root of the requested class.
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    /// The vector is not a positive real root.
    #[error("not a positive real root")]
    NotPositiveReal,
    /// A curve does not have the shape produced by the class builders.
    #[error("curve is not a canonical curve")]
    UnrecognizedCurve,
    /// Two polylines touch or overlap instead of crossing transversally.
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    /// A layout cannot hold the requested drawing.
    #[error("layout too tight: {0}")]
    LayoutTooTight(&'static str),
    /// A walk is not a string in the quiver.
    #[error("invalid string: {0}")]
    InvalidString(&'static str),
    /// Integer arithmetic left the supported range.
    #[error("arithmetic overflow")]
    Overflow,
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

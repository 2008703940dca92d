// SPDX-License-Identifier: MIT OR Apache-2.0

//! Combinatorics and geometry of the affine quiver of type Ã(n−1,1).
//!
//! Positive real roots of this quiver are in bijection with a family of
//! canonical curves, both in a punctured upper half-plane and in an annulus
//! with n marked points. This crate builds those curves, counts their
//! intersections with exact arithmetic in two independent geometric models,
//! and computes dimensions of Ext¹ between the corresponding string modules
//! directly from quiver representations.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod annulus;
pub mod error;
pub mod ext_oracle;
pub mod geom_oracle;
pub mod root_system;
pub mod word_builder;

pub use error::{Error, Result};
pub use root_system::{ReflectionWord, Root, RootClass};
pub use word_builder::{Crossing, Direction, PlaneCurve};

/// Exact rational number used for every coordinate.
pub type Q = num_rational::Ratio<i128>;

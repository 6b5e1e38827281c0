//! Exact combinatorics for set splitting.
//!
//! A set `A` splits a set `B` when `|A ∩ B|` is `|B|/2`, rounded either way
//! for odd `|B|`. This crate covers both directions of that relation:
//!
//! * [`families`]: families that split *every* subset of `[k]` (or every
//!   subset of a bounded size), their minimum size, canonical forms and the
//!   structure of their Hamming representations.
//! * [`counting`]: exact splitter counts of a fixed family, closed forms for
//!   one and two sets, and exhaustive minimum searches for up to three sets.
//! * [`game`]: the two-player splitting game, solved under perfect play.
//!
//! Everything is built on the word-sized [`SubsetMask`] and [`Family`] types
//! of [`setcore`].

pub mod counting;
pub mod error;
pub mod families;
pub mod game;
pub mod setcore;

pub use error::{Error, Result};
pub use setcore::{splits, Arrangement2, Family, RegionVector, SubsetMask, VennDecomposition};

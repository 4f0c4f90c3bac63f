//! Parabolic Catalan combinatorics: R-permutations and their 312-avoidance,
//! gapless R-tuples, keys and row end max tableaux, scanning tableaux,
//! Demazure tableau sets with their convexity, and the associated counts.
//!
//! Conventions: values, positions, rows and columns are 1-based; `n` is
//! always explicit (a partition carries its trailing zeros).

pub mod demazure;
pub mod enumeration;
pub mod error;
pub mod rtuples;
pub mod scanning;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};

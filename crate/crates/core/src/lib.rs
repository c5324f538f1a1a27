//! Bounds on the size of ternary codes under the d1 distance
//! `d1(x, y) = sum |x_i - y_i|` over the alphabet `{-1, 0, +1}`.
//!
//! The crate computes certified lower and upper bounds on `T(n, d)`, the
//! largest length-`n` ternary code with minimum d1 distance `d`, builds
//! explicit codes that witness the lower bounds, finds exact values by
//! maximum-clique search at small lengths, and evaluates the asymptotic
//! rate-distance curves.

pub mod asymptotics;
pub mod bounds;
pub mod code;
pub mod codebook;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod search;
pub mod word;

pub use bounds::{build_table, BoundEntry, BoundTable, Provenance, TableOptions};
pub use code::{BinaryCode, Code, Metric, MinDistance, TernaryCode};
pub use error::{Error, Result};
pub use word::{
    d1_distance, hamming_distance, phi_inverse, phi_map, BinaryWord, Symbol, TernaryWord,
};

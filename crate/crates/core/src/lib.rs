//! List colouring of squares of graphs with maximum degree at most four.
//!
//! The crate colours `G²` constructively from lists of the sizes guaranteed by
//! the six maximum-average-degree / planarity regimes, detects the reducible
//! configurations that drive the reduction, checks the discharging arithmetic
//! in exact rationals, computes the exact maximum average degree, and
//! certifies reductions with a brute-force oracle.

pub mod discharging;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod listcolor;
pub mod oracle;
pub mod par;
pub mod profile;
pub mod rational;
pub mod sparsity;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;

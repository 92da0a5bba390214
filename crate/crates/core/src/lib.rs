//! Minimum-sum proper edge coloring.
//!
//! A proper edge coloring assigns positive integer colors to edges so that
//! edges sharing an endpoint get distinct colors; its value is the sum of all
//! edge colors. This crate provides polynomial-time constructions that come
//! with provable bounds on that value, closed-form optima for complete
//! graphs, upper bounds for split graphs, and a small exact branch-and-bound
//! solver for cross-checking everything at desk scale.
//!
//! The crate is `no_std` compatible (it requires `alloc`). Wall-clock
//! budgets, file formats, and the command-line front end live in the
//! companion `edgesum` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod approx;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod kernels;
mod matching;
pub mod sequential;
pub mod solver;
pub mod split;

pub use coloring::{verify_coloring, EdgeColoring, VerificationReport};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, Side, SplitDecomposition};

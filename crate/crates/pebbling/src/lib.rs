//! Exact pebbling toolkit for rectangular grids.
//!
//! Decides k-reachability and solvability exactly, decomposes distributions
//! into regions of reachability, computes dyadic value and effect potentials,
//! solves small exact-rational linear programs with dual certificates, and
//! computes optimal (k-)pebbling numbers of small grids by exhaustive search.

pub mod dist;
pub mod engine;
pub mod enumerate;
pub mod grid;
pub mod io;
pub mod lemmas;
pub mod lp;
pub mod potential;
pub mod rat;
pub mod regions;
pub mod report;
pub mod search;

pub use dist::Distribution;
pub use grid::{GridDims, Vertex};
pub use rat::Rat;

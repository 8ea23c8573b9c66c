//! Exact analysis of bubble-sort star graphs.
//!
//! The n-dimensional bubble-sort star graph has one vertex per permutation
//! of {1,…,n} and an edge wherever two permutations differ by swapping
//! adjacent positions (k−1,k) or position 1 with position k. The crate
//! builds these graphs, counts edge-disjoint paths under edge faults with
//! a unit-capacity max-flow engine, and runs exhaustive or seeded-sampling
//! sweeps that verify the graphs' fault-tolerance structure.

pub mod fault;
pub mod flow;
pub mod perm;
pub mod topology;
pub mod verify;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

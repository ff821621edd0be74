//! Combinatorics of nilpotent orbits of classical groups, the hypersphericality
//! candidate test for generalized Whittaker data, and the duality bookkeeping
//! around it, with an exact-arithmetic Lie algebra oracle for cross-checks.

pub mod checks;
pub mod classifier;
pub mod duality;
pub mod error;
pub mod exec;
pub mod lie;
pub mod linalg;
pub mod orbit;
pub mod partitions;
pub mod report;

pub use error::{Error, Result};

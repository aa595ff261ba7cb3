//! Exact computations with chromatic symmetric functions.
//!
//! The crate covers integer partitions and Kostka numbers, symmetric
//! functions in the `m`, `e` and `s` bases with rational coefficients,
//! labeled graphs with twin and clan operations, chromatic symmetric
//! functions with closed forms for paths, cycles and tadpoles, and the
//! noncommutative refinement used for positivity certificates.

pub mod csf;
pub mod error;
pub mod graphs;
pub mod ncsym;
pub mod partitions;
pub mod rational;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use graphs::Graph;
pub use partitions::Partition;
pub use rational::Rational;
pub use symfunc::{Basis, SymFn};

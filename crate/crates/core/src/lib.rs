//! Exact enumeration of Borel conjugacy classes in small nilpotent orbit
//! closures, their typed weak-order graphs, and non-normality certificates.

pub mod error;
pub mod graph;
pub mod mat;
pub mod minimal;
pub mod orbits;
pub mod report;
pub mod roots;
pub mod toric;
pub mod weyl;

pub use error::{Error, Result};

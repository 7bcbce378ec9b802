//! Isometry groups, symmetry predicates, conic and quadric classification,
//! and a small 2D truss solver.

pub mod error;
pub mod isometry;
pub mod numcore;
pub mod quadform;
pub mod symcheck;
pub mod trussfem;

pub use error::{Error, Result};

pub mod bitset;
pub mod domsolve;
pub mod error;
pub mod graph;
pub mod numtheory;
pub mod paperlab;

pub use error::{Error, Result};

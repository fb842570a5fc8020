use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capacity exceeded: {vertices} vertices requested, cap is {cap}")]
    Capacity { vertices: usize, cap: usize },
    #[error("instance not covered by the catalogue: {0}")]
    Uncovered(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("singular linear system: rank {rank} < dimension {dim}")]
    SingularSystem { rank: usize, dim: usize },
    #[error("pole hit: {0} vanishes")]
    PoleHit(String),
    #[error("invalid gauge: {0}")]
    InvalidGauge(String),
    #[error("divergent integral on region {region}: affine form is {value} on ray {ray:?}")]
    Divergent { region: String, ray: Vec<i64>, value: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

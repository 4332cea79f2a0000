//! Exact computations around planar kinematics (PK) for CEGM biadjoint amplitudes.

pub mod algebra;
pub mod amplitude;
pub mod cli;
pub mod cyclic_points;
pub mod error;
pub mod geometry;
pub mod kinematics;
pub mod polytopes;
pub mod tropical;
pub mod verification;

pub use error::{Error, Result};

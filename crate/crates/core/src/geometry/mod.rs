//! Exact polyhedral geometry shared by the tropical and polytope computations.

pub mod cone;
pub mod lp;

pub use cone::{abs_det, dot, extreme_rays, int_rank, ivec, primitive, primitive_from_rational, Cone, IVec};
pub use lp::{maximize, minimize, strict_interior_point, LpOutcome};

//! The amplitude as one Laplace-type integral over the positive tropical Grassmannian.

mod feynman;
mod integrand;
mod laurent;
mod regions;
mod web;

pub use feynman::{feynman_sum, planar_variable};
pub use integrand::{
    build_integrand, claim_identity_sign, claim_integrand, tropicalize, Integrand, MinTerm, TropicalExpression,
};
pub use laurent::Laurent;
pub use regions::{
    enumerate_regions, enumerate_regions_ordered, evaluate_integrand, evaluate_regions, integrate_region,
    LinearityRegion, TropicalReport,
};
pub use web::{claim_polynomials, claim_to_web, web_matrix, WebChart};

use crate::error::Result;
use crate::kinematics::KinematicPoint;

/// Total and histogram of the tropical integral at `s`.
pub fn evaluate_amplitude(s: &KinematicPoint) -> Result<TropicalReport> {
    evaluate_integrand(&build_integrand(s)?)
}

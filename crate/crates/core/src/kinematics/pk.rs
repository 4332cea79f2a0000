use num_traits::{One, Zero};
use std::collections::BTreeMap;

use super::{solve_eta_system, KSubset, KinematicPoint};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// s_J = +1 on cyclic windows and -1 on windows with one gap {i..i+k-2, i+k}, added up
/// when two such sets coincide.
pub fn pk_closed_form(k: usize, n: usize) -> KinematicPoint {
    let mut acc: BTreeMap<KSubset, Rational> = BTreeMap::new();
    for i in 1..=n as i64 {
        let window = KSubset::from_cyclic(n, (0..k as i64).map(|t| i + t)).unwrap();
        *acc.entry(window).or_insert_with(Rational::zero) += Rational::one();
        let gap = KSubset::from_cyclic(n, (0..k as i64 - 1).map(|t| i + t).chain([i + k as i64])).unwrap();
        *acc.entry(gap).or_insert_with(Rational::zero) -= Rational::one();
    }
    KinematicPoint::from_values(k, n, acc).unwrap()
}

/// The PK point: η_J = 1 on every nonfrozen J. Uses the closed form when n > 2k.
pub fn pk_point(k: usize, n: usize) -> Result<KinematicPoint> {
    if k < 2 || k + 2 > n {
        return Err(Error::InvalidInput(format!("need 2 <= k <= n-2, got (k,n) = ({k},{n})")));
    }
    if n > 2 * k {
        return Ok(pk_closed_form(k, n));
    }
    pk_point_solved(k, n)
}

/// The PK point obtained by solving the η-system with all targets 1.
pub fn pk_point_solved(k: usize, n: usize) -> Result<KinematicPoint> {
    let targets = KSubset::nonfrozen(k, n).into_iter().map(|j| (j, Rational::one())).collect();
    solve_eta_system(k, n, &targets)
}

pub fn flip_point(s: &KinematicPoint) -> KinematicPoint {
    s.flip()
}

/// Which deformation of the PK targets a conical point uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicalVariant {
    /// γ_J on a (k-1)×(n-k+1) array.
    Gamma,
    /// γ'_J on a (k-1)×(n-k) array.
    GammaPrime,
}

/// γ'_J = Σ_i α_{i,[j_i-(i-1), j_{i+1}-i-1]}.
pub fn gamma_prime(j: &KSubset, alpha: &[Vec<Rational>]) -> Rational {
    let mut acc = Rational::zero();
    for i in 1..j.k() {
        if let Some((a, b)) = j.row_interval(i) {
            for c in a..=b {
                acc += &alpha[i - 1][c - 1];
            }
        }
    }
    acc
}

/// γ_J = Σ_l (α_{l, j_l-(l-1)} - α_{l, j_{l+1}-l}).
pub fn gamma(j: &KSubset, alpha: &[Vec<Rational>]) -> Rational {
    let e = j.elements();
    let mut acc = Rational::zero();
    for l in 1..j.k() {
        acc += &alpha[l - 1][e[l - 1] - l];
        acc -= &alpha[l - 1][e[l] - l - 1];
    }
    acc
}

/// Solve η_J = γ_J (or γ'_J) for the conical point attached to α.
pub fn conical_point(alpha: &[Vec<Rational>], variant: ConicalVariant) -> Result<KinematicPoint> {
    let k = alpha.len() + 1;
    let cols = alpha.first().map_or(0, Vec::len);
    if alpha.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("ragged α array".into()));
    }
    let n = match variant {
        ConicalVariant::GammaPrime => cols + k,
        ConicalVariant::Gamma => cols + k - 1,
    };
    let targets = KSubset::nonfrozen(k, n)
        .into_iter()
        .map(|j| {
            let t = match variant {
                ConicalVariant::GammaPrime => gamma_prime(&j, alpha),
                ConicalVariant::Gamma => gamma(&j, alpha),
            };
            (j, t)
        })
        .collect();
    solve_eta_system(k, n, &targets)
}

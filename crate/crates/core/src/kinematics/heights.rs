use std::collections::BTreeMap;

use super::{KSubset, KinematicPoint};
use crate::algebra::Rational;
use num_traits::Zero;

/// L_j(x) = x_{j+1} + 2x_{j+2} + ... + (n-1)x_{j-1}, indices cyclic, j 1-based.
pub fn l_functional(j: usize, x: &[i64]) -> i64 {
    let n = x.len();
    (1..n).map(|m| m as i64 * x[(j - 1 + m) % n]).sum()
}

/// n·ρ_v(x) = min_j L_j(x - v); returned unscaled as an integer.
pub fn rho_scaled(v: &[i64], x: &[i64]) -> i64 {
    let d: Vec<i64> = x.iter().zip(v).map(|(a, b)| a - b).collect();
    (1..=x.len()).map(|j| l_functional(j, &d)).min().unwrap_or(0)
}

/// ρ_v(x) = (1/n) min_j L_j(x - v).
pub fn rho(v: &[i64], x: &[i64]) -> Rational {
    Rational::new(rho_scaled(v, x).into(), (x.len() as i64).into())
}

/// The dual convention (1/n) max_j L_j(x - v).
pub fn rho_dual(v: &[i64], x: &[i64]) -> Rational {
    let d: Vec<i64> = x.iter().zip(v).map(|(a, b)| a - b).collect();
    let m = (1..=x.len()).map(|j| l_functional(j, &d)).max().unwrap_or(0);
    Rational::new(m.into(), (x.len() as i64).into())
}

/// n·h_J(I).
pub fn height_scaled(j: &KSubset, i: &KSubset) -> i64 {
    rho_scaled(&j.indicator(), &i.indicator())
}

/// The height function 𝔥_J localized to the vertices e_I of the hypersimplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightVector {
    pub k: usize,
    pub n: usize,
    heights: BTreeMap<KSubset, Rational>,
}

impl HeightVector {
    pub fn get(&self, i: &KSubset) -> Rational {
        self.heights.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero heights.
    pub fn iter(&self) -> impl Iterator<Item = (&KSubset, &Rational)> {
        self.heights.iter()
    }
}

pub fn height_vector(j: &KSubset) -> HeightVector {
    let (k, n) = (j.k(), j.n());
    let heights = KSubset::all(k, n)
        .into_iter()
        .filter_map(|i| {
            let h = height_scaled(j, &i);
            (h != 0).then(|| (i, Rational::new(h.into(), (n as i64).into())))
        })
        .collect();
    HeightVector { k, n, heights }
}

/// η_J(s) = -𝔥_J · s.
pub fn eta(j: &KSubset, s: &KinematicPoint) -> Rational {
    let n = j.n() as i64;
    let mut acc = Rational::zero();
    for (i, v) in s.iter() {
        let h = height_scaled(j, i);
        if h != 0 {
            acc -= v * Rational::from_integer(h.into());
        }
    }
    acc / Rational::from_integer(n.into())
}

//! Independent oracle for `k = 2`: the sum over planar cubic diagrams, i.e. polygon triangulations.

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::kinematics::{KSubset, KinematicPoint};

/// Planar variable `X_{i,j} = (p_i + … + p_{j-1})² = Σ_{i ≤ a < b < j} s_{ab}`.
pub fn planar_variable(s: &KinematicPoint, i: usize, j: usize) -> Rational {
    let n = s.n();
    let mut x = Rational::zero();
    for a in i..j {
        for b in a + 1..j {
            x += s.get(&KSubset::new(n, vec![a, b]).expect("valid pair"));
        }
    }
    x
}

/// `Σ_T ∏_{chords (i,j) ∈ T} 1 / X_{i,j}` over triangulations of the n-gon.
pub fn feynman_sum(s: &KinematicPoint) -> Result<Rational> {
    if s.k() != 2 {
        return Err(Error::InvalidInput("the diagram oracle is for k = 2".into()));
    }
    let n = s.n();
    let weight = |i: usize, j: usize| -> Result<Rational> {
        if j - i < 2 || (i == 1 && j == n) {
            return Ok(Rational::one());
        }
        let x = planar_variable(s, i, j);
        if x.is_zero() {
            return Err(Error::PoleHit(format!("X_{{{i},{j}}}")));
        }
        Ok(x.recip())
    };
    // a[i][j]: sum over triangulations of the polygon on vertices i..j, chords strictly inside
    let mut a = vec![vec![Rational::zero(); n + 1]; n + 1];
    for i in 1..n {
        a[i][i + 1] = Rational::one();
    }
    for len in 2..n {
        for i in 1..=n - len {
            let j = i + len;
            let mut acc = Rational::zero();
            for (m, aim) in a[i].iter().enumerate().take(j).skip(i + 1) {
                acc += aim * &a[m][j] * weight(i, m)? * weight(m, j)?;
            }
            a[i][j] = acc;
        }
    }
    Ok(a[1][n].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::pk_point;

    #[test]
    fn planar_kinematics_counts_triangulations() {
        for (n, cat) in [(4, 2), (5, 5), (6, 14), (7, 42), (8, 132)] {
            let s = pk_point(2, n).unwrap();
            assert_eq!(feynman_sum(&s).unwrap(), Rational::from_integer(cat.into()), "n = {n}");
        }
    }
}

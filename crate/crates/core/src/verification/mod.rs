//! Cross-ratio form of the PK scattering equations, the conjugation involution on solutions,
//! and consistency suites that tie the other modules together.

mod suite;

pub use suite::{verify_suite, Check, CheckStatus, SuiteOptions, VerifyReport};

use std::collections::BTreeSet;

use rand::Rng;

use crate::algebra::{Cyclotomic, Field, Rational};
use crate::amplitude::{potential_gradient, PointConfiguration};
use crate::cyclic_points::{FixedPointLabel, SolutionConfiguration};
use crate::error::{Error, Result};
use crate::kinematics::{pk_point, solve_eta_system, KSubset, KinematicPoint};

/// `w^{(L)}_{i,j} = p_{L,i,j'} p_{L,i',j} / (p_{L,i,j} p_{L,i',j'})`.
///
/// `i'` and `j'` are the cyclic successors of `i` and `j` in `[n] \ L`. Minors are taken with
/// columns in the written order `L, i, j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossRatio {
    pub n: usize,
    pub l: Vec<usize>,
    pub i: usize,
    pub j: usize,
    pub i_next: usize,
    pub j_next: usize,
}

impl CrossRatio {
    pub fn new(n: usize, l: Vec<usize>, i: usize, j: usize) -> Result<Self> {
        let in_range = |a: usize| (1..=n).contains(&a);
        if !in_range(i) || !in_range(j) || !l.iter().all(|&a| in_range(a)) {
            return Err(Error::InvalidInput(format!("cross-ratio index out of range 1..={n}")));
        }
        let succ = |a: usize| {
            let mut b = a % n + 1;
            while l.contains(&b) {
                b = b % n + 1;
            }
            b
        };
        let (i_next, j_next) = (succ(i), succ(j));
        let mut all: BTreeSet<usize> = l.iter().copied().collect();
        all.extend([i, j, i_next, j_next]);
        if all.len() != l.len() + 4 {
            return Err(Error::InvalidInput(format!("L ∪ {{i,i',j,j'}} is not {} distinct labels", l.len() + 4)));
        }
        Ok(CrossRatio { n, l, i, j, i_next, j_next })
    }

    fn cols(&self, a: usize, b: usize) -> Vec<usize> {
        let mut c = self.l.clone();
        c.extend([a, b]);
        c
    }

    /// The four column lists `(num1, num2, den1, den2)`.
    pub fn minors(&self) -> [Vec<usize>; 4] {
        [
            self.cols(self.i, self.j_next),
            self.cols(self.i_next, self.j),
            self.cols(self.i, self.j),
            self.cols(self.i_next, self.j_next),
        ]
    }
}

impl std::fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let l: Vec<String> = self.l.iter().map(|a| a.to_string()).collect();
        write!(f, "w^({})_{{{},{}}}", l.join(","), self.i, self.j)
    }
}

pub fn cross_ratio<F: Field>(w: &CrossRatio, c: &PointConfiguration<F>) -> Result<F> {
    let [a, b, d1, d2] = w.minors();
    let den = c.minor_ordered(&d1).times(&c.minor_ordered(&d2));
    c.minor_ordered(&a)
        .times(&c.minor_ordered(&b))
        .divide(&den)
        .ok_or_else(|| Error::PoleHit(format!("denominator of {w}")))
}

fn wrap(n: usize, a: usize) -> usize {
    (a - 1) % n + 1
}

/// `w^{(L_h + t)}_{1+t, k+1+t}` with `L_h = {2, …, k} \ {h}`.
fn family_member(k: usize, n: usize, h: usize, t: usize) -> Result<CrossRatio> {
    let l: Vec<usize> = (2..=k).filter(|&a| a != h).map(|a| wrap(n, a + t)).collect();
    CrossRatio::new(n, l, wrap(n, 1 + t), wrap(n, k + 1 + t))
}

/// The equations `w^{(L_h+t)}_{1+t,k+1+t} = w^{(L_h+t+1)}_{2+t,k+2+t}` for `h = 2..k`, `t = 0..n-1`.
///
/// For k = 3 and k = 4 these are the derived cross-ratio systems; for k ≥ 5 the same pattern is only
/// conjectured.
pub fn pk_cross_ratio_equations(k: usize, n: usize) -> Result<Vec<(CrossRatio, CrossRatio)>> {
    if k < 2 || n < k + 2 {
        return Err(Error::InvalidInput(format!("cross-ratio system needs 2 ≤ k ≤ n-2, got ({k},{n})")));
    }
    let mut out = Vec::with_capacity((k - 1) * n);
    for t in 0..n {
        for h in 2..=k {
            out.push((family_member(k, n, h, t)?, family_member(k, n, h, t + 1)?));
        }
    }
    Ok(out)
}

/// Left-minus-right differences of the cross-ratio system, `(k-1)n` entries.
pub fn pk_cross_ratio_residuals<F: Field>(c: &PointConfiguration<F>) -> Result<Vec<F>> {
    pk_cross_ratio_equations(c.k(), c.n())?
        .iter()
        .map(|(lhs, rhs)| Ok(cross_ratio(lhs, c)?.minus(&cross_ratio(rhs, c)?)))
        .collect()
}

/// The same equations with denominators cleared, `N_L D_R - N_R D_L`; defined on every configuration.
///
/// Some solutions (for instance `(1,2,5,8)` at `(4,8)`) have vanishing denominator minors, where only
/// this form can be evaluated.
pub fn pk_cross_ratio_cleared_residuals<F: Field>(c: &PointConfiguration<F>) -> Result<Vec<F>> {
    let prod = |a: &[usize], b: &[usize]| c.minor_ordered(a).times(&c.minor_ordered(b));
    Ok(pk_cross_ratio_equations(c.k(), c.n())?
        .iter()
        .map(|(lhs, rhs)| {
            let [a, b, d1, d2] = lhs.minors();
            let [e, f, d3, d4] = rhs.minors();
            prod(&a, &b).times(&prod(&d3, &d4)).minus(&prod(&e, &f).times(&prod(&d1, &d2)))
        })
        .collect())
}

/// Whether the cross-ratio system is a derived form of the equations (k ≤ 4) or only conjectured.
pub fn cross_ratio_system_is_conjectural(k: usize) -> bool {
    k >= 5
}

/// The solution with exponents `m_a ↦ n - m_a`.
pub fn conjugation_involution(sol: &SolutionConfiguration) -> SolutionConfiguration {
    SolutionConfiguration::from_label(&sol.label.conjugate())
}

/// Entrywise complex conjugate of the solution matrix.
pub fn conjugate_matrix(sol: &SolutionConfiguration) -> PointConfiguration<Cyclotomic> {
    sol.matrix.map(|z| z.conj())
}

/// Whether the set of canonical labels is mapped to itself by conjugation.
pub fn closed_under_conjugation(labels: &[FixedPointLabel]) -> bool {
    let set: BTreeSet<FixedPointLabel> = labels.iter().map(|l| l.canonical()).collect();
    set.iter().all(|l| set.contains(&l.conjugate()))
}

/// For k = 3, the sign `ε` with `p*_{a,a+1,a+3} = ε (ω₁ω₂)^{-2a-3} p_{a,a+2,a+3}`, where column `a`
/// carries the powers `ω^a`; `None` if neither sign works.
pub fn k3_conjugation_sign(sol: &SolutionConfiguration, a: usize) -> Option<i32> {
    let c = &sol.matrix;
    assert_eq!(c.k(), 3, "the conjugation identity is stated for k = 3");
    let n = c.n();
    let col = |e: usize| e % n + 1;
    let lhs = c.minor_ordered(&[col(a), col(a + 1), col(a + 3)]).conj();
    let w = c.entry(1, 2).times(c.entry(2, 2));
    let e = (2 * a + 3) as u64;
    let factor = w.pow(e).recip()?;
    let rhs = factor.times(&c.minor_ordered(&[col(a), col(a + 2), col(a + 3)]));
    if lhs.minus(&rhs).vanishes() {
        Some(1)
    } else if lhs.plus(&rhs).vanishes() {
        Some(-1)
    } else {
        None
    }
}

/// Gradient of the flipped PK potential at the conjugated solution.
pub fn flip_residuals(sol: &SolutionConfiguration) -> Result<Vec<Cyclotomic>> {
    let (k, n) = (sol.matrix.k(), sol.matrix.n());
    let flipped: KinematicPoint = pk_point(k, n)?.flip();
    potential_gradient(&flipped, &conjugate_matrix(sol))
}

/// The kinematic point with independent random positive targets `η_J ∈ {1/4, …, 9}`.
pub fn random_positive_point(k: usize, n: usize, rng: &mut impl Rng) -> Result<KinematicPoint> {
    let targets = KSubset::nonfrozen(k, n).into_iter().map(|j| (j, random_positive(rng))).collect();
    solve_eta_system(k, n, &targets)
}

/// A `rows × cols` array of random positive rationals.
pub fn random_alpha(rows: usize, cols: usize, rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    (0..rows).map(|_| (0..cols).map(|_| random_positive(rng)).collect()).collect()
}

fn random_positive(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(1i64..=9).into(), rng.gen_range(1i64..=4).into())
}

/// `∏_i (Σ_j α_{i,j}) / ∏_j α_{i,j}`, the conjectured value at the conical point of `α`.
pub fn conical_product(alpha: &[Vec<Rational>]) -> Rational {
    alpha.iter().map(|row| row.iter().sum::<Rational>() / row.iter().product::<Rational>()).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Matrix};
    use crate::cyclic_points::solutions;

    fn random_config(k: usize, n: usize, seed: i64) -> PointConfiguration<Rational> {
        PointConfiguration::new(Matrix::from_fn(k, n, |r, c| {
            let v = (seed * 31 + (r as i64) * 17 + (c as i64) * 13 + (r * c) as i64 * 7) % 23 - 11;
            rat(v, (r + c + 1) as i64)
        }))
    }

    #[test]
    fn successors_skip_l() {
        let w = CrossRatio::new(5, vec![2], 1, 4).unwrap();
        assert_eq!((w.i_next, w.j_next), (3, 5));
        let w = CrossRatio::new(5, vec![3], 1, 4).unwrap();
        assert_eq!((w.i_next, w.j_next), (2, 5));
        let w = CrossRatio::new(6, vec![1], 4, 6).unwrap();
        assert_eq!((w.i_next, w.j_next), (5, 2));
        assert!(CrossRatio::new(4, vec![2], 1, 3).is_err());
    }

    #[test]
    fn k3_instance_matches_displayed_minors() {
        let c = random_config(3, 6, 1);
        let w = CrossRatio::new(6, vec![2], 1, 4).unwrap();
        let p = |v: &[usize]| c.minor_ordered(v);
        let direct = p(&[1, 2, 5]) * p(&[2, 3, 4]) / (p(&[1, 2, 4]) * p(&[2, 3, 5]));
        assert_eq!(cross_ratio(&w, &c).unwrap(), direct);
    }

    #[test]
    fn k4_instance_matches_direct_minors() {
        let c = random_config(4, 8, 3);
        let w = CrossRatio::new(8, vec![2, 3], 1, 5).unwrap();
        let p = |v: &[usize]| c.minor_ordered(v);
        let direct = p(&[1, 2, 3, 6]) * p(&[2, 3, 4, 5]) / (p(&[1, 2, 3, 5]) * p(&[2, 3, 4, 6]));
        assert_eq!(cross_ratio(&w, &c).unwrap(), direct);
    }

    #[test]
    fn invariant_under_torus_and_gl() {
        let c = random_config(3, 7, 5);
        let w = CrossRatio::new(7, vec![3], 1, 5).unwrap();
        let base = cross_ratio(&w, &c).unwrap();
        let g = Matrix::from_rows(vec![
            vec![rat(2, 1), rat(1, 3), rat(0, 1)],
            vec![rat(-1, 1), rat(1, 1), rat(5, 2)],
            vec![rat(0, 1), rat(4, 1), rat(1, 1)],
        ]);
        let moved = g.mul(c.matrix());
        let scaled = Matrix::from_fn(3, 7, |r, col| moved.get(r, col) * rat(col as i64 + 2, 3));
        assert_eq!(cross_ratio(&w, &PointConfiguration::new(scaled)).unwrap(), base);
    }

    #[test]
    fn equation_list_for_k3_and_k4_starts_with_displayed_pairs() {
        let eq = pk_cross_ratio_equations(3, 6).unwrap();
        assert_eq!(eq.len(), 12);
        let names: Vec<String> = eq[..2].iter().map(|(a, b)| format!("{a}={b}")).collect();
        assert_eq!(names, ["w^(3)_{1,4}=w^(4)_{2,5}", "w^(2)_{1,4}=w^(3)_{2,5}"]);
        let eq = pk_cross_ratio_equations(4, 8).unwrap();
        assert_eq!(eq.len(), 24);
        let names: Vec<String> = eq[..3].iter().map(|(a, b)| format!("{a}={b}")).collect();
        assert_eq!(
            names,
            ["w^(3,4)_{1,5}=w^(4,5)_{2,6}", "w^(2,4)_{1,5}=w^(3,5)_{2,6}", "w^(2,3)_{1,5}=w^(3,4)_{2,6}"]
        );
    }

    #[test]
    fn residuals_vanish_on_k3_and_k4_solutions() {
        for (k, n) in [(3, 6), (3, 7), (4, 8)] {
            for sol in solutions(k, n as u64) {
                let cleared = pk_cross_ratio_cleared_residuals(&sol.matrix).unwrap();
                assert!(cleared.iter().all(|v| v.vanishes()), "({k},{n}) {}", sol.label);
                match pk_cross_ratio_residuals(&sol.matrix) {
                    Ok(r) => assert!(r.iter().all(|v| v.vanishes()), "({k},{n}) {}", sol.label),
                    Err(e) => assert_eq!(sol.label.to_string(), "(1,2,5,8)", "{e}"),
                }
            }
        }
    }

    #[test]
    fn residuals_do_not_vanish_at_a_random_point() {
        let c = random_config(3, 6, 2);
        assert!(pk_cross_ratio_residuals(&c).unwrap().iter().any(|v| !v.vanishes()));
        assert!(pk_cross_ratio_cleared_residuals(&c).unwrap().iter().any(|v| !v.vanishes()));
    }

    #[test]
    fn involution_squares_to_identity_and_preserves_solutions() {
        for sol in solutions(3, 7) {
            let twice = conjugation_involution(&conjugation_involution(&sol));
            assert_eq!(twice.label, sol.label.canonical());
        }
        let labels: Vec<FixedPointLabel> = solutions(3, 7).into_iter().map(|s| s.label).collect();
        assert!(closed_under_conjugation(&labels));
    }

    #[test]
    fn k3_identity_holds_with_a_minus_sign() {
        let label = FixedPointLabel::new(6, &[1, 2]).unwrap();
        let sol = SolutionConfiguration::from_label(&label);
        for a in 0..6 {
            assert_eq!(k3_conjugation_sign(&sol, a), Some(-1));
        }
    }

    #[test]
    fn conjugated_solutions_solve_flipped_equations() {
        for sol in solutions(3, 7) {
            assert!(flip_residuals(&sol).unwrap().iter().all(|v| v.vanishes()));
        }
    }
}

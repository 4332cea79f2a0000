//! Kinematic space K(k,n), the planar basis η_J, the PK point and its deformations.

mod eta_system;
mod heights;
mod ksubset;
mod pk;
mod point;

pub use eta_system::{eta_matrix, solve_eta_system, EtaSystem};
pub use heights::{eta, height_scaled, height_vector, l_functional, rho, rho_dual, rho_scaled, HeightVector};
pub use ksubset::KSubset;
pub use pk::{
    conical_point, flip_point, gamma, gamma_prime, pk_closed_form, pk_point, pk_point_solved, ConicalVariant,
};
pub use point::KinematicPoint;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Rational};
    use num_traits::One;

    fn s(n: usize, v: &[usize]) -> KSubset {
        KSubset::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn pk_two_four() {
        let p = pk_point(2, 4).unwrap();
        for (j, v) in [([1, 2], 1), ([2, 3], 1), ([3, 4], 1), ([1, 4], 1), ([1, 3], -2), ([2, 4], -2)] {
            assert_eq!(p.get(&s(4, &j)), int(v));
        }
        assert_eq!(p, pk_closed_form(2, 4));
    }

    #[test]
    fn eta_small_examples() {
        let mut p = KinematicPoint::zero(2, 4);
        // a generic conserving point: s12=s34=a, s13=s24=b, s14=s23=c with a+b+c=0
        for (j, v) in [([1, 2], 2), ([3, 4], 2), ([1, 3], -5), ([2, 4], -5), ([1, 4], 3), ([2, 3], 3)] {
            p.set(s(4, &j), int(v));
        }
        assert!(p.is_conserving());
        assert_eq!(eta(&s(4, &[1, 3]), &p), p.get(&s(4, &[2, 3])));
        assert_eq!(eta(&s(4, &[2, 4]), &p), p.get(&s(4, &[1, 2])));
        assert_eq!(eta(&s(4, &[1, 2]), &p), int(0));
    }

    #[test]
    fn pk_three_six_and_flip() {
        let p = pk_point(3, 6).unwrap();
        assert!(p.is_conserving());
        for j in KSubset::all(3, 6) {
            let expect = if j.is_frozen() { int(0) } else { int(1) };
            assert_eq!(eta(&j, &p), expect, "{j}");
        }
        let f = flip_point(&p);
        for j in KSubset::nonfrozen(3, 6) {
            assert_eq!(eta(&j, &f), int(j.cyclic_intervals().len() as i64 - 1), "{j}");
        }
        assert_eq!(flip_point(&f), p);
    }

    #[test]
    fn flip_preserves_pk_for_k2() {
        for n in 4..=9 {
            let p = pk_point(2, n).unwrap();
            assert_eq!(flip_point(&p), p);
        }
    }

    #[test]
    fn conical_chart_three_six() {
        // all α free: η_J - 1 must reproduce the displayed chart
        let alpha = vec![vec![rat(1, 2), rat(-1, 3), rat(2, 7)], vec![rat(5, 1), rat(-2, 9), rat(1, 11)]];
        let a = |i: usize, j: usize| alpha[i - 1][j - 1].clone();
        let shifted: Vec<Vec<Rational>> = alpha.clone();
        let mut targets = std::collections::BTreeMap::new();
        for j in KSubset::nonfrozen(3, 6) {
            targets.insert(j.clone(), gamma_prime(&j, &shifted) + Rational::one());
        }
        let p = solve_eta_system(3, 6, &targets).unwrap();
        let chart = [
            ([1, 3, 4], a(1, 1)),
            ([2, 4, 5], a(1, 2)),
            ([3, 5, 6], a(1, 3)),
            ([1, 4, 5], a(1, 1) + a(1, 2)),
            ([2, 5, 6], a(1, 2) + a(1, 3)),
            ([1, 2, 4], a(2, 1)),
            ([2, 3, 5], a(2, 2)),
            ([3, 4, 6], a(2, 3)),
            ([1, 2, 5], a(2, 1) + a(2, 2)),
            ([2, 3, 6], a(2, 2) + a(2, 3)),
            ([1, 3, 5], a(1, 1) + a(2, 2)),
            ([1, 3, 6], a(1, 1) + a(2, 2) + a(2, 3)),
            ([1, 4, 6], a(1, 1) + a(1, 2) + a(2, 3)),
            ([2, 4, 6], a(1, 2) + a(2, 3)),
        ];
        for (j, v) in chart {
            assert_eq!(eta(&s(6, &j), &p), v + Rational::one(), "{j:?}");
        }
    }

    #[test]
    fn conical_zero_and_two_five() {
        let z = conical_point(&[vec![int(0); 3]], ConicalVariant::GammaPrime).unwrap();
        assert_eq!(z, KinematicPoint::zero(2, 5));
        let ones = vec![vec![int(1); 3], vec![int(1); 3]];
        let p = conical_point(&ones, ConicalVariant::GammaPrime).unwrap();
        assert_eq!(eta(&s(6, &[1, 3, 5]), &p), int(2));
    }
}

use planar_kinematics::algebra::{int, Rational};
use planar_kinematics::kinematics::{
    eta, eta_matrix, flip_point, pk_closed_form, pk_point, pk_point_solved, rho, rho_dual, KSubset, KinematicPoint,
};
use planar_kinematics::verification::random_positive_point;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn e(n: usize, idx: &[usize]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &i in idx {
        v[i] += 1;
    }
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A translate `v`, a sample point `x` of matching degree and a cyclic quadruple `a < b < c < d`.
fn octahedron_case() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, [usize; 4])> {
    (4usize..9).prop_flat_map(|n| {
        (
            prop::collection::vec(-3i64..=3, n),
            prop::collection::vec(-3i64..=3, n),
            prop::sample::subsequence((0..n).collect::<Vec<_>>(), 4),
        )
            .prop_map(|(v, mut x, q)| {
                // ρ compares points of equal degree: Σx = Σ(v + e_ab)
                let gap = v.iter().sum::<i64>() + 2 - x.iter().sum::<i64>();
                x[q[1]] += gap;
                (v, x, [q[0], q[1], q[2], q[3]])
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn octahedron_recurrence((v, x, [a, b, c, d]) in octahedron_case()) {
        let n = v.len();
        let r = |p: usize, q: usize| rho(&add(&v, &e(n, &[p, q])), &x);
        let lhs = r(a, c) + r(b, d);
        let rhs = std::cmp::max(r(a, b) + r(c, d), r(a, d) + r(b, c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn octahedron_recurrence_dual((v, x, [a, b, c, d]) in octahedron_case()) {
        let n = v.len();
        let r = |p: usize, q: usize| rho_dual(&add(&v, &e(n, &[p, q])), &x);
        let lhs = r(a, c) + r(b, d);
        let rhs = std::cmp::min(r(a, b) + r(c, d), r(a, d) + r(b, c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(k in 2usize..5, extra in 2usize..5, seed in any::<u64>()) {
        let n = k + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_positive_point(k, n, &mut rng).unwrap();
        prop_assert_eq!(KinematicPoint::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn flip_is_an_involution(k in 2usize..5, extra in 2usize..5, seed in any::<u64>()) {
        let n = k + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_positive_point(k, n, &mut rng).unwrap();
        prop_assert!(p.is_conserving());
        let f = flip_point(&p);
        prop_assert!(f.is_conserving());
        prop_assert_eq!(flip_point(&f), p);
    }

    #[test]
    fn eta_is_linear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_positive_point(3, 7, &mut rng).unwrap();
        let q = random_positive_point(3, 7, &mut rng).unwrap();
        let mut sum = KinematicPoint::zero(3, 7);
        for j in KSubset::all(3, 7) {
            sum.set(j.clone(), p.get(&j) + q.get(&j));
        }
        for j in KSubset::nonfrozen(3, 7) {
            prop_assert_eq!(eta(&j, &sum), eta(&j, &p) + eta(&j, &q));
        }
    }
}

#[test]
fn literal_min_form_fails() {
    // v = 0, x = e_13 at n = 4: the min form of the recurrence does not hold for the min-convention ρ
    let (v, x) = (vec![0; 4], e(4, &[0, 2]));
    let r = |p: usize, q: usize| rho(&add(&v, &e(4, &[p, q])), &x);
    let lhs = r(0, 2) + r(1, 3);
    let min = std::cmp::min(r(0, 1) + r(2, 3), r(0, 3) + r(1, 2));
    assert_ne!(lhs, min);
}

#[test]
fn eta_basis_is_nonsingular() {
    for k in 2..=5usize {
        for n in k + 2..=11 {
            if KSubset::all(k, n).len() > 300 {
                continue;
            }
            let m = eta_matrix(k, n);
            assert_eq!(m.rows(), m.cols(), "({k},{n})");
            assert_eq!(m.rank(), m.cols(), "({k},{n})");
        }
    }
}

#[test]
fn pk_point_definitions_agree() {
    for k in 2..=5usize {
        for n in 2 * k + 1..=12 {
            // the exact η-system solve grows quickly with C(n, k)
            if KSubset::all(k, n).len() > 252 {
                continue;
            }
            let p = pk_point_solved(k, n).unwrap();
            assert_eq!(pk_closed_form(k, n), p, "({k},{n})");
        }
    }
    for k in 2..=5usize {
        let n = 2 * k;
        let p = pk_point(k, n).unwrap();
        assert!(p.is_conserving());
        for j in KSubset::all(k, n) {
            let want = if j.is_frozen() { int(0) } else { int(1) };
            assert_eq!(eta(&j, &p), want, "({k},{n}) {j}");
        }
    }
}

#[test]
fn pk_is_sparse() {
    for (k, n) in [(2, 7), (3, 8), (4, 11)] {
        let p = pk_point(k, n).unwrap();
        assert_eq!(p.support_len(), 2 * n, "({k},{n})");
        let total: Rational = p.iter().map(|(_, v)| v.clone()).sum();
        assert_eq!(total, int(0));
    }
}

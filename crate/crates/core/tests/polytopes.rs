mod common;

use common::{F_PI36, F_R36, F_R37, F_R38};
use num_bigint::BigInt;
use num_traits::Zero;
use planar_kinematics::algebra::{int, Rational};
use planar_kinematics::amplitude::catalan_number;
use planar_kinematics::cyclic_points::binomial;
use planar_kinematics::kinematics::pk_point;
use planar_kinematics::kinematics::{conical_point, ConicalVariant};
use planar_kinematics::polytopes::{
    duality_check, euler_characteristic, graded_embedding_check, newton_polytope_check, pi_facets_and_interior,
    pi_polytope, psi_embedding, root_polytope,
};
use planar_kinematics::verification::random_alpha;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn f_vectors() {
    assert_eq!(root_polytope(3, 6, true).f_vector(), F_R36.to_vec());
    assert_eq!(root_polytope(3, 7, true).f_vector(), F_R37.to_vec());
    assert_eq!(root_polytope(3, 8, true).f_vector(), F_R38.to_vec());
    assert_eq!(pi_polytope(3, 6).unwrap().f_vector(), F_PI36.to_vec());
    for f in [F_R36.to_vec(), F_R37.to_vec(), F_R38.to_vec(), F_PI36.to_vec()] {
        assert_eq!(euler_characteristic(&f), 0);
    }
}

#[test]
fn root_volumes_are_catalan() {
    for (k, n) in [(2, 5), (2, 6), (2, 7), (3, 6), (3, 7), (3, 8), (4, 8)] {
        let vol = root_polytope(k, n, true).relative_volume();
        assert_eq!(vol, Rational::from_integer(catalan_number(k as u64, (n - k) as u64)), "({k},{n})");
    }
}

#[test]
fn pi_interior_and_facets() {
    let mut cases = 0;
    for k in 2..=16usize {
        for n in k + 2..=20 {
            let b = binomial(n as u64, k as u64);
            if b > 150 {
                continue;
            }
            let (facets, interior) = pi_facets_and_interior(k, n);
            assert_eq!(facets as u128, b - n as u128, "({k},{n})");
            assert_eq!(interior, vec![vec![BigInt::zero(); (k - 1) * (n - k - 1)]], "({k},{n})");
            cases += 1;
        }
    }
    assert_eq!(cases, 39);
}

#[test]
fn pi_vertex_description_agrees() {
    for (k, n) in [(2, 6), (3, 6), (3, 7)] {
        let pi = pi_polytope(k, n).unwrap();
        let (facets, interior) = pi_facets_and_interior(k, n);
        assert_eq!(pi.facets.len(), facets);
        assert_eq!(pi.interior_lattice_points(), interior);
    }
}

#[test]
fn duality_and_newton() {
    for (k, n) in [(2, 5), (2, 6), (3, 6)] {
        let d = duality_check(k, n).unwrap();
        assert!(d.holds(), "({k},{n}) {d:?}");
        assert!(d.f_vectors_reversed, "({k},{n})");
        assert_eq!(newton_polytope_check(k, n).unwrap(), (true, true), "({k},{n})");
    }
}

#[test]
fn psi_at_origin_is_pk() {
    for (k, n) in [(2, 5), (2, 7), (3, 6), (3, 7), (4, 8)] {
        let zero = vec![vec![int(0); n - k]; k - 1];
        assert_eq!(psi_embedding(k, n, &zero).unwrap(), pk_point(k, n).unwrap(), "({k},{n})");
    }
}

#[test]
fn psi_shifts_conical_points() {
    // Ψ(α) has η = γ' + 1, the conical point has η = γ'
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let alpha = random_alpha(2, 3, &mut rng);
    let psi = psi_embedding(3, 6, &alpha).unwrap();
    let cone = conical_point(&alpha, ConicalVariant::GammaPrime).unwrap();
    let pk = pk_point(3, 6).unwrap();
    for (j, v) in pk.iter() {
        assert_eq!(psi.get(j) - cone.get(j), v.clone(), "{j}");
    }
}

#[test]
fn graded_embeddings() {
    for (k, n) in [(3, 6), (3, 7), (4, 8)] {
        for i in 1..k {
            let r = graded_embedding_check(k, n, i).unwrap();
            assert!(r.vertices_match && r.isomorphic, "({k},{n}) i = {i}: {r:?}");
        }
    }
}

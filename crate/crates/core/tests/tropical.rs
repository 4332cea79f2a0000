mod common;

use common::{HIST_36, HIST_37};
use planar_kinematics::algebra::{int, rat, Rational};
use planar_kinematics::amplitude::catalan_number;
use planar_kinematics::kinematics::{conical_point, pk_point, ConicalVariant};
use planar_kinematics::tropical::{
    build_integrand, claim_identity_sign, claim_integrand, enumerate_regions_ordered, evaluate_amplitude,
    evaluate_integrand, evaluate_regions, feynman_sum, TropicalReport,
};
use planar_kinematics::verification::{conical_product, random_alpha, random_positive_point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn histogram(rep: &TropicalReport) -> Vec<(Rational, usize)> {
    rep.histogram.clone()
}

fn expected(h: &[(i64, usize)]) -> Vec<(Rational, usize)> {
    h.iter().map(|&(v, f)| (int(v), f)).collect()
}

#[test]
fn k2_regions_and_totals() {
    for n in 5..=8usize {
        let rep = evaluate_amplitude(&pk_point(2, n).unwrap()).unwrap();
        assert_eq!(rep.regions.len(), n << (n - 5), "n = {n}");
        assert_eq!(rep.total, Rational::from_integer(catalan_number(2, n as u64 - 2)));
    }
    let rep = evaluate_amplitude(&pk_point(2, 6).unwrap()).unwrap();
    assert_eq!(histogram(&rep), vec![(int(1), 10), (int(2), 2)]);
}

#[test]
fn three_six() {
    let rep = evaluate_amplitude(&pk_point(3, 6).unwrap()).unwrap();
    assert_eq!(rep.regions.len(), 27);
    assert_eq!(rep.total, int(42));
    assert_eq!(histogram(&rep), expected(&HIST_36));
}

#[test]
fn three_seven() {
    let rep = evaluate_amplitude(&pk_point(3, 7).unwrap()).unwrap();
    assert_eq!(rep.regions.len(), 128);
    assert_eq!(rep.total, int(462));
    assert_eq!(histogram(&rep), expected(&HIST_37));
}

#[test]
fn region_sum_is_total() {
    let rep = evaluate_amplitude(&pk_point(3, 7).unwrap()).unwrap();
    let sum: Rational = rep.regions.iter().map(|(_, v)| v.clone()).sum();
    assert_eq!(sum, rep.total);
    let weighted: Rational = rep.histogram.iter().map(|(v, f)| v * int(*f as i64)).sum();
    assert_eq!(weighted, rep.total);
}

#[test]
fn torus_fixing_column_is_irrelevant() {
    for c in 1..=3 {
        let rep = evaluate_integrand(&claim_integrand(3, 6, c)).unwrap();
        assert_eq!(rep.total, int(42), "column {c}");
        assert_eq!(rep.regions.len(), 27, "column {c}");
    }
    for c in 1..=4 {
        assert_eq!(evaluate_integrand(&claim_integrand(3, 7, c)).unwrap().total, int(462), "column {c}");
    }
}

#[test]
fn min_term_order_is_irrelevant() {
    let f = build_integrand(&pk_point(3, 7).unwrap()).unwrap();
    let forward: Vec<usize> = (0..f.terms.len()).collect();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    let a = evaluate_regions(enumerate_regions_ordered(&f, &forward)).unwrap();
    let b = evaluate_regions(enumerate_regions_ordered(&f, &backward)).unwrap();
    assert_eq!(a.total, b.total);
    assert_eq!(a.histogram, b.histogram);
    assert_eq!(a.regions.len(), b.regions.len());
}

#[test]
fn web_identity_reproduces_potential() {
    for k in 2..=4usize {
        for n in k + 2..=8 {
            if (k - 1) * (n - k - 1) > 8 {
                continue;
            }
            assert_eq!(claim_identity_sign(&pk_point(k, n).unwrap()), Some(-1), "({k},{n})");
        }
    }
}

#[test]
fn k2_matches_diagram_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..20 {
        let n = 5 + i % 3;
        let s = random_positive_point(2, n, &mut rng).unwrap();
        assert_eq!(evaluate_amplitude(&s).unwrap().total, feynman_sum(&s).unwrap(), "sample {i}, n = {n}");
    }
}

#[test]
fn feynman_sum_at_pk_is_catalan() {
    for n in 4..=9usize {
        let cat = Rational::from_integer(catalan_number(2, n as u64 - 2));
        assert_eq!(feynman_sum(&pk_point(2, n).unwrap()).unwrap(), cat);
    }
}

#[test]
fn conical_unit_array() {
    let alpha = vec![vec![int(1); 3]];
    let s = conical_point(&alpha, ConicalVariant::GammaPrime).unwrap();
    assert_eq!(evaluate_amplitude(&s).unwrap().total, int(3));
}

#[test]
fn conical_product_small_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (k, n) in [(2, 5), (2, 6), (3, 6)] {
        for _ in 0..3 {
            let alpha = random_alpha(k - 1, n - k, &mut rng);
            let s = conical_point(&alpha, ConicalVariant::GammaPrime).unwrap();
            assert_eq!(evaluate_amplitude(&s).unwrap().total, conical_product(&alpha), "({k},{n}) {alpha:?}");
        }
    }
    let alpha = vec![vec![rat(1, 2), rat(3, 1)], vec![rat(2, 1), rat(1, 3)]];
    assert_eq!(conical_product(&alpha), rat(7, 3) * rat(7, 2));
}

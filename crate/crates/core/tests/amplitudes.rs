mod common;

use common::{label, M2, M3};
use planar_kinematics::algebra::{rat, Cyclotomic, Field, Rational};
use planar_kinematics::amplitude::{
    amplitude_pk, catalan_number, choose_gauge, find_frame, potential_gradient, summand, summand_with_gauge, Backend,
    GaugeUsed, SolutionTerm,
};
use planar_kinematics::cyclic_points::{solution_labels, SolutionConfiguration};
use planar_kinematics::kinematics::pk_point;

fn int(v: u64) -> Rational {
    Rational::from_integer(v.into())
}

#[test]
fn catalan_numbers() {
    assert_eq!(catalan_number(2, 4), 14.into());
    assert_eq!(catalan_number(3, 3), 42.into());
    assert_eq!(catalan_number(4, 4), 24024.into());
    assert_eq!(catalan_number(4, 5), 1662804.into());
}

#[test]
fn k2_amplitudes() {
    for (&want, n) in M2.iter().zip(4usize..) {
        let rep = amplitude_pk(2, n, Backend::Exact).unwrap();
        assert_eq!(rep.amplitude, int(want), "n = {n}");
        assert!(rep.matches_catalan());
    }
}

#[test]
fn k3_amplitudes() {
    for (&want, n) in M3.iter().zip(5usize..) {
        let rep = amplitude_pk(3, n, Backend::Exact).unwrap();
        assert_eq!(rep.amplitude, int(want), "n = {n}");
    }
}

fn standard(k: usize) -> impl Fn(&SolutionTerm) -> bool {
    let frame: Vec<usize> = (1..=k + 1).collect();
    move |t| t.gauge == GaugeUsed::Frame(frame.clone())
}

#[test]
fn four_eight_split() {
    let rep = amplitude_pk(4, 8, Backend::Exact).unwrap();
    assert_eq!(rep.amplitude, int(24024));
    let is_std = standard(4);
    assert_eq!(rep.terms.iter().filter(|t| is_std(t)).count(), 7);
    assert_eq!(rep.partial_sum(&is_std), Some(int(24008)));
    assert_eq!(rep.partial_sum(|t| !is_std(t)), Some(int(16)));
}

#[test]
fn four_nine_split() {
    let rep = amplitude_pk(4, 9, Backend::Exact).unwrap();
    assert_eq!(rep.amplitude, int(1662804));
    let framed = rep.partial_sum(SolutionTerm::framed).unwrap();
    let frameless = rep.partial_sum(|t| !t.framed()).unwrap();
    assert_eq!(framed, rat(14965237, 9));
    assert_eq!(frameless, rat(-1, 9));
    let mut labels: Vec<Vec<u64>> =
        rep.terms.iter().filter(|t| !t.framed()).map(|t| t.label.reduced().to_vec()).collect();
    labels.sort();
    assert_eq!(labels, vec![vec![1, 3, 6], vec![1, 4, 7]]);
}

#[test]
fn published_frameless_gauge_agrees() {
    // the published gauge deletes composite rows 10, 13, 15..27 (1-based)
    let mut published: Vec<usize> = vec![10, 13];
    published.extend(15..=27);
    let published: Vec<usize> = published.iter().map(|i| i - 1).collect();
    let s = pk_point(4, 9).unwrap();
    for e in [[1u64, 3, 6], [1, 4, 7]] {
        let sol = SolutionConfiguration::from_label(&label(9, &e));
        assert!(find_frame(&sol.matrix).is_none());
        let (ours, _) = summand(&s, &sol.matrix).unwrap();
        let theirs = summand_with_gauge(&s, &sol.matrix, &GaugeUsed::General(published.clone())).unwrap();
        assert!(theirs.minus(&ours).vanishes(), "{e:?}");
    }
}

#[test]
fn gradient_vanishes_at_every_solution() {
    for k in 2..=4usize {
        for n in k + 2..=10 {
            let s = pk_point(k, n).unwrap();
            for l in solution_labels(k, n as u64) {
                let sol = SolutionConfiguration::from_label(&l);
                let g = potential_gradient(&s, &sol.matrix).unwrap();
                assert!(g.iter().all(Cyclotomic::vanishes), "({k},{n}) {l}");
            }
        }
    }
}

#[test]
fn frames_agree_with_each_other() {
    // every frame of a solution yields the same summand
    let s = pk_point(3, 7).unwrap();
    for l in solution_labels(3, 7) {
        let sol = SolutionConfiguration::from_label(&l);
        let mut values: Vec<Cyclotomic> = Vec::new();
        for a in 1..=7usize {
            for b in a + 1..=7 {
                for c in b + 1..=7 {
                    for d in c + 1..=7 {
                        if let Ok(v) = summand_with_gauge(&s, &sol.matrix, &GaugeUsed::Frame(vec![a, b, c, d])) {
                            values.push(v);
                        }
                    }
                }
            }
        }
        assert!(values.len() > 1, "{l}");
        assert!(values.windows(2).all(|w| w[0].minus(&w[1]).vanishes()), "{l}");
    }
}

#[test]
fn frame_and_general_gauge_agree() {
    let s = pk_point(4, 8).unwrap();
    for l in solution_labels(4, 8) {
        let sol = SolutionConfiguration::from_label(&l);
        let frame = choose_gauge(&sol.matrix).unwrap();
        let general = planar_kinematics::amplitude::first_valid_gauge(&sol.matrix).unwrap();
        let a = summand_with_gauge(&s, &sol.matrix, &frame).unwrap();
        let b = summand_with_gauge(&s, &sol.matrix, &GaugeUsed::General(general.deleted_rows)).unwrap();
        assert!(a.minus(&b).vanishes(), "{l}");
    }
}

#[test]
fn float_backend_agrees() {
    for (k, n) in [(3, 8), (4, 9), (5, 10)] {
        let rep = amplitude_pk(k, n, Backend::Float).unwrap();
        assert!(rep.matches_catalan(), "({k},{n}) {}", rep.amplitude);
    }
    let exact = amplitude_pk(4, 8, Backend::Exact).unwrap();
    let float = amplitude_pk(4, 8, Backend::Float).unwrap();
    for (a, b) in exact.terms.iter().zip(&float.terms) {
        assert_eq!(a.label, b.label);
        let (x, y) = (a.value.to_complex(), b.value.to_complex());
        assert!((x - y).norm() <= 1e-6 * x.norm().max(1.0), "{}", a.label);
    }
}

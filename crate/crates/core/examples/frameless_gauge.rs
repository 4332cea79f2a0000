//! Gauge fixing for solutions without a frame, at (4,9).
//!
//! The reduced determinant uses k² - 1 deleted rows chosen so that the null-space minor is nonzero.
//! Two different admissible choices, including the one in the literature, give the same summand.

use planar_kinematics::algebra::Field;
use planar_kinematics::amplitude::{find_frame, first_valid_gauge, summand_with_gauge, GaugeUsed};
use planar_kinematics::cyclic_points::{FixedPointLabel, SolutionConfiguration};
use planar_kinematics::kinematics::pk_point;

fn main() -> anyhow::Result<()> {
    let s = pk_point(4, 9)?;
    let mut published: Vec<usize> = vec![10, 13];
    published.extend(15..=27);
    let published: Vec<usize> = published.iter().map(|i| i - 1).collect();

    for e in [[1u64, 3, 6], [1, 4, 7]] {
        let sol = SolutionConfiguration::from_label(&FixedPointLabel::new(9, &e)?);
        assert!(find_frame(&sol.matrix).is_none());
        let ours = first_valid_gauge(&sol.matrix)?.deleted_rows;
        let a = summand_with_gauge(&s, &sol.matrix, &GaugeUsed::General(ours.clone()))?;
        let b = summand_with_gauge(&s, &sol.matrix, &GaugeUsed::General(published.clone()))?;
        println!("{}", sol.label);
        println!("  lex-first gauge {ours:?}");
        println!("    summand {a}");
        println!("  published gauge {published:?}");
        println!("    summand {b}");
        println!("  equal: {}", a.minus(&b).vanishes());
        match a.to_rational() {
            Some(r) => println!("  rational value {r}"),
            None => println!("  not rational on its own; the pair sums to a rational"),
        }
    }
    Ok(())
}

//! The PK equations as cross-ratio identities, and the two involutions acting on solutions.

use planar_kinematics::algebra::Field;
use planar_kinematics::cyclic_points::solutions;
use planar_kinematics::verification::{
    conjugation_involution, k3_conjugation_sign, pk_cross_ratio_cleared_residuals, pk_cross_ratio_equations,
    pk_cross_ratio_residuals,
};

fn main() -> anyhow::Result<()> {
    for (lhs, rhs) in pk_cross_ratio_equations(3, 6)?.iter().take(4) {
        println!("{lhs} = {rhs}");
    }
    for (k, n) in [(3, 7), (4, 8), (5, 11)] {
        let mut poles = 0;
        let mut good = 0;
        let sols = solutions(k, n);
        for sol in &sols {
            let ok = match pk_cross_ratio_residuals(&sol.matrix) {
                Ok(r) => r.iter().all(Field::vanishes),
                Err(_) => {
                    poles += 1;
                    pk_cross_ratio_cleared_residuals(&sol.matrix)?.iter().all(Field::vanishes)
                }
            };
            good += ok as usize;
        }
        println!("({k},{n}): {good}/{} solutions satisfy the system, {poles} through the cleared form", sols.len());
    }
    for sol in solutions(3, 7) {
        let conj = conjugation_involution(&sol);
        println!("{} <-> {}  column sign {:?}", sol.label, conj.label, k3_conjugation_sign(&sol, 0));
    }
    Ok(())
}

//! Π_{k,n} as the polar of R_{k,n}, Π as a Newton polytope, and the graded embeddings between root polytopes.

use planar_kinematics::algebra::int;
use planar_kinematics::kinematics::pk_point;
use planar_kinematics::polytopes::{duality_check, graded_embedding_check, newton_polytope_check, psi_embedding};

fn main() -> anyhow::Result<()> {
    for (k, n) in [(2, 5), (2, 6), (3, 6), (3, 7)] {
        let d = duality_check(k, n)?;
        let (newton, in_subspace) = newton_polytope_check(k, n)?;
        println!(
            "({k},{n}): duality {} (f reversed {}), Newton {newton} (support in H {in_subspace})",
            d.holds(),
            d.f_vectors_reversed
        );
    }
    for (k, n) in [(3, 6), (3, 7), (4, 8)] {
        for i in 1..k {
            let r = graded_embedding_check(k, n, i)?;
            println!("R({},{}) -> R({k},{n}) via row {i}: {r:?}", k - 1, n - 1);
        }
    }
    let zero = vec![vec![int(0); 3]; 2];
    println!("\nΨ(0) = PK at (3,6): {}", psi_embedding(3, 6, &zero)? == pk_point(3, 6)?);
    Ok(())
}

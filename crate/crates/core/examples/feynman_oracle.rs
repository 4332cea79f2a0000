//! For k = 2 the tropical integral is a sum over planar cubic diagrams; compare both at random points.

use planar_kinematics::tropical::{evaluate_amplitude, feynman_sum};
use planar_kinematics::verification::random_positive_point;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 5..=8 {
        for _ in 0..3 {
            let s = random_positive_point(2, n, &mut rng)?;
            let trop = evaluate_amplitude(&s)?.total;
            let diagrams = feynman_sum(&s)?;
            println!(
                "n = {n}: tropical {trop:<24} diagrams {diagrams:<24} {}",
                if trop == diagrams { "ok" } else { "MISMATCH" }
            );
        }
    }
    Ok(())
}

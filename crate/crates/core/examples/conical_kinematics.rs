//! Conical points: η_J given by sums of an array α. The integral appears to factor row by row.

use planar_kinematics::algebra::int;
use planar_kinematics::kinematics::{conical_point, ConicalVariant};
use planar_kinematics::tropical::evaluate_amplitude;
use planar_kinematics::verification::{conical_product, random_alpha};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let ones = vec![vec![int(1); 3]];
    let s = conical_point(&ones, ConicalVariant::GammaPrime)?;
    println!("(2,5), α = 1: {}", evaluate_amplitude(&s)?.total);

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (k, n) in [(2, 5), (2, 6), (3, 6)] {
        for _ in 0..3 {
            let alpha = random_alpha(k - 1, n - k, &mut rng);
            let s = conical_point(&alpha, ConicalVariant::GammaPrime)?;
            let total = evaluate_amplitude(&s)?.total;
            let rows: Vec<String> =
                alpha.iter().map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")).collect();
            println!("({k},{n}) α = [{}]: {total} vs product {}", rows.join(" | "), conical_product(&alpha));
        }
    }
    Ok(())
}

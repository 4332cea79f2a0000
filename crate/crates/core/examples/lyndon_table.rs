//! Aperiodic k-subsets of Z/n up to rotation, and how many of them solve the PK equations.

use planar_kinematics::cyclic_points::{count_lyndon, solution_labels};

fn main() -> anyhow::Result<()> {
    print!("{:>4}", "k\\n");
    for n in 3..=24 {
        print!("{n:>6}");
    }
    println!();
    for k in 2..=6u64 {
        print!("{k:>4}");
        for n in 3..=24 {
            print!("{:>6}", count_lyndon(k, n));
        }
        println!();
    }

    println!("\nk = 5 solutions (Lyndon count minus defective classes):");
    for n in (6..=24).step_by(6) {
        let lyndon = count_lyndon(5, n);
        let sols = solution_labels(5, n).len();
        println!("  n = {n:>2}: {lyndon} classes, {sols} solutions");
    }
    Ok(())
}

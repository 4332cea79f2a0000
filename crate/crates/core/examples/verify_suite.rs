//! Every invariant checkable at one (k, n), as run by `pk verify`.

use planar_kinematics::verification::{verify_suite, SuiteOptions};

fn main() -> anyhow::Result<()> {
    let rep = verify_suite(3, 7, SuiteOptions { samples: 2, seed: 9, ..Default::default() })?;
    for c in &rep.checks {
        let flag = if c.conjecture_support { " (conjecture)" } else { "" };
        println!("{:<34} {:?}{flag}  {}", c.name, c.status, c.detail);
    }
    println!("passed: {}", rep.passed());
    Ok(())
}

//! Cyclic fixed points at a chosen (k, n): classes, defective classes, solutions and frames.
//!
//! `cargo run --example fixed_points -- 5 12`

use anyhow::{bail, Context};
use planar_kinematics::amplitude::find_frame;
use planar_kinematics::cyclic_points::{count_lyndon, defective_labels, enumerate_aperiodic_classes, solutions};

fn parse_kn() -> anyhow::Result<(usize, u64)> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [] => Ok((4, 9)),
        [k, n] => Ok((k.parse().context("k")?, n.parse().context("n")?)),
        _ => bail!("usage: fixed_points [K N]"),
    }
}

fn main() -> anyhow::Result<()> {
    let (k, n) = parse_kn()?;
    if k < 2 || n < k as u64 + 2 {
        bail!("need 2 <= k <= n - 2");
    }
    let classes = enumerate_aperiodic_classes(k, n);
    println!("({k},{n}): Lyndon count {}, {} classes enumerated", count_lyndon(k as u64, n), classes.len());

    let defective = defective_labels(k, n);
    println!("defective: {}", defective.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));

    let sols = solutions(k, n);
    println!("{} solutions", sols.len());
    if (k - 1) * n as usize <= 40 {
        for sol in &sols {
            let frame = find_frame(&sol.matrix);
            let tag = frame.map_or("frameless".to_string(), |f| format!("frame {f:?}"));
            println!("  {:<20} {tag}", sol.label.to_string());
        }
    }
    Ok(())
}

//! The amplitude as a piecewise-linear Laplace integral: linearity regions and their values.

use planar_kinematics::algebra::format_rational;
use planar_kinematics::kinematics::pk_point;
use planar_kinematics::tropical::{build_integrand, evaluate_amplitude};

fn main() -> anyhow::Result<()> {
    let f = build_integrand(&pk_point(3, 6)?)?;
    println!("(3,6) integrand: {} variables {:?}, {} min-terms", f.dim, f.var_names, f.terms.len());

    for (k, n) in [(2, 6), (3, 6), (3, 7), (3, 8)] {
        let rep = evaluate_amplitude(&pk_point(k, n)?)?;
        let hist: Vec<String> = rep.histogram.iter().map(|(v, c)| format!("{}x{}", c, format_rational(v))).collect();
        println!("({k},{n}): {} regions, total {}", rep.regions.len(), format_rational(&rep.total));
        println!("  {}", hist.join(" "));
    }

    let rep = evaluate_amplitude(&pk_point(3, 6)?)?;
    let (region, value) = rep.regions.iter().max_by_key(|(_, v)| v.clone()).expect("regions");
    let form: Vec<String> = region.form.iter().map(format_rational).collect();
    println!("\nlargest (3,6) region {}: value {}, linear form ({})", region.label(), value, form.join(", "));
    Ok(())
}

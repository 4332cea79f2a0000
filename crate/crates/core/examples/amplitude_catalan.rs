//! m^(k)_n at planar kinematics as a sum over cyclic fixed points, compared with the Catalan number.

use planar_kinematics::algebra::format_rational;
use planar_kinematics::amplitude::{amplitude_pk, Backend, GaugeUsed};

fn main() -> anyhow::Result<()> {
    for (k, n) in [(2, 6), (2, 10), (3, 6), (3, 7), (3, 8), (3, 9), (4, 8), (4, 9)] {
        let rep = amplitude_pk(k, n, Backend::Exact)?;
        println!(
            "m^({k})_{n} = {:>8}  catalan {:>8}  [{} solutions]",
            format_rational(&rep.amplitude),
            rep.catalan,
            rep.terms.len()
        );
    }

    // (4,8): seven solutions take the frame {1,...,5}, one needs another frame
    let rep = amplitude_pk(4, 8, Backend::Exact)?;
    let standard = GaugeUsed::Frame((1..=5).collect());
    let a = rep.partial_sum(|t| t.gauge == standard).unwrap_or_default();
    let b = rep.partial_sum(|t| t.gauge != standard).unwrap_or_default();
    println!("\n(4,8): {} + {}", format_rational(&a), format_rational(&b));

    // (4,9): two solutions admit no frame at all
    let rep = amplitude_pk(4, 9, Backend::Exact)?;
    let framed = rep.partial_sum(|t| t.framed()).unwrap_or_default();
    let frameless = rep.partial_sum(|t| !t.framed()).unwrap_or_default();
    println!("(4,9): {} + ({})", format_rational(&framed), format_rational(&frameless));

    let rep = amplitude_pk(5, 12, Backend::Float)?;
    println!(
        "\nfloat (5,12): {} vs {} (match {})",
        format_rational(&rep.amplitude),
        rep.catalan,
        rep.matches_catalan()
    );
    Ok(())
}

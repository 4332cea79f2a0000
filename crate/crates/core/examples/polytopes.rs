//! Root polytopes R_{k,n} and the polytopes Π_{k,n}: f-vectors, volumes and lattice points.

use planar_kinematics::amplitude::catalan_number;
use planar_kinematics::polytopes::{pi_facets_and_interior, pi_polytope, root_polytope};

fn main() -> anyhow::Result<()> {
    for (k, n) in [(2, 5), (2, 6), (3, 6), (3, 7), (3, 8)] {
        let r = root_polytope(k, n, true);
        println!(
            "R({k},{n}): f = {:?}, volume {} (catalan {})",
            r.f_vector(),
            r.relative_volume(),
            catalan_number(k as u64, (n - k) as u64)
        );
    }
    let pi = pi_polytope(3, 6)?;
    println!("\nPi(3,6): f = {:?}, interior lattice points {:?}", pi.f_vector(), pi.interior_lattice_points());
    for (k, n) in [(2, 10), (3, 9), (4, 8), (5, 9)] {
        let (facets, interior) = pi_facets_and_interior(k, n);
        println!("Pi({k},{n}): {facets} facets, {} interior lattice point(s)", interior.len());
    }
    Ok(())
}

//! The planar kinematics point, the η basis, flips and the octahedron recurrence of heights.

use planar_kinematics::kinematics::{eta, flip_point, height_vector, pk_point, rho, KSubset, KinematicPoint};

fn main() -> anyhow::Result<()> {
    let s = pk_point(3, 7)?;
    println!("PK(3,7) has {} nonzero entries, conserving: {}", s.support_len(), s.is_conserving());
    println!("{}", s.to_json());
    assert_eq!(KinematicPoint::from_json(&s.to_json())?, s);

    let f = flip_point(&pk_point(3, 6)?);
    for j in KSubset::nonfrozen(3, 6).iter().take(6) {
        println!("η_{j}(flip PK) = {}", eta(j, &f));
    }

    let h = height_vector(&KSubset::new(4, vec![1, 3])?);
    let parts: Vec<String> = h.iter().map(|(i, v)| format!("{v}·e{i}")).collect();
    println!("\nh_13 = {}", parts.join(" + "));

    // ρ_{v+e_ac} + ρ_{v+e_bd} = max(ρ_{v+e_ab} + ρ_{v+e_cd}, ρ_{v+e_ad} + ρ_{v+e_bc}) on Σx = Σv + 2
    let v = [0, 1, -1, 0, 2];
    let x = [1, 0, 2, 0, 1];
    let r = |a: usize, b: usize| {
        let mut w = v.to_vec();
        w[a] += 1;
        w[b] += 1;
        rho(&w, &x)
    };
    let lhs = r(0, 2) + r(1, 3);
    let rhs = std::cmp::max(r(0, 1) + r(2, 3), r(0, 3) + r(1, 2));
    println!("octahedron: {lhs} = {rhs}");
    Ok(())
}

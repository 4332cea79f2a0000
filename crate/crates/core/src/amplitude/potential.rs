use super::PointConfiguration;
use crate::algebra::{Field, Matrix};
use crate::error::{Error, Result};
use crate::kinematics::KinematicPoint;

/// Composite index (a, i) ↦ (a-1)(k-1) + (i-1), 0-based.
pub fn composite_index(k: usize, a: usize, i: usize) -> usize {
    (a - 1) * (k - 1) + (i - 1)
}

struct LocalInverse<F> {
    cols: Vec<usize>,
    coeff: F,
    inv: Matrix<F>,
}

fn local_inverses<F: Field>(s: &KinematicPoint, c: &PointConfiguration<F>) -> Result<Vec<LocalInverse<F>>> {
    if !c.is_inhomogeneous() {
        return Err(Error::InvalidInput("configuration is not in inhomogeneous coordinates".into()));
    }
    let like = c.entry(0, 1).clone();
    s.iter()
        .map(|(j, v)| {
            let m = c.columns(j.elements());
            let inv = m.inverse().map_err(|_| Error::PoleHit(format!("p_{j}")))?;
            Ok(LocalInverse { cols: j.elements().to_vec(), coeff: like.from_rational_like(v), inv })
        })
        .collect()
}

/// ∂S/∂z_{a,i} for S = Σ_J s_J log p_J, as a vector of length (k-1)n.
pub fn potential_gradient<F: Field>(s: &KinematicPoint, c: &PointConfiguration<F>) -> Result<Vec<F>> {
    let k = c.k();
    let like = c.entry(0, 1).clone();
    let mut g = vec![like.zero_like(); (k - 1) * c.n()];
    for loc in local_inverses(s, c)? {
        for (pos, &a) in loc.cols.iter().enumerate() {
            for i in 1..k {
                let idx = composite_index(k, a, i);
                g[idx] = g[idx].plus(&loc.coeff.times(loc.inv.get(pos, i)));
            }
        }
    }
    Ok(g)
}

/// Ψ_{(a,i),(b,j)} = ∂²S/∂z_{a,i}∂z_{b,j}.
pub fn hessian<F: Field>(s: &KinematicPoint, c: &PointConfiguration<F>) -> Result<Matrix<F>> {
    let k = c.k();
    let d = (k - 1) * c.n();
    let like = c.entry(0, 1).clone();
    let mut h = Matrix::from_fn(d, d, |_, _| like.zero_like());
    for loc in local_inverses(s, c)? {
        for (pa, &a) in loc.cols.iter().enumerate() {
            for (pb, &b) in loc.cols.iter().enumerate() {
                for i in 1..k {
                    for j in 1..k {
                        // ∂/∂M_{j,pb} (M^{-1})_{pa,i} = -(M^{-1})_{pa,j} (M^{-1})_{pb,i}
                        let t = loc.inv.get(pa, j).times(loc.inv.get(pb, i));
                        let (r, col) = (composite_index(k, a, i), composite_index(k, b, j));
                        let v = h.get(r, col).minus(&loc.coeff.times(&t));
                        h.set(r, col, v);
                    }
                }
            }
        }
    }
    Ok(h)
}

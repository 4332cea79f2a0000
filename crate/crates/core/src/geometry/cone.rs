//! Pointed polyhedral cones in exact integer arithmetic.
//!
//! H→V conversion is the double-description method with the combinatorial adjacency test.
//! V→H runs the same routine on the dual cone. Once rays and facets are known, everything
//! else (face lattice, pulling triangulation) is purely combinatorial on the ray–facet
//! incidence sets.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Matrix, Rational};

pub type IVec = Vec<BigInt>;

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divide out the gcd of the entries.
pub fn primitive(mut v: IVec) -> IVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Scale a rational vector to a primitive integer vector with the same direction.
pub fn primitive_from_rational(v: &[Rational]) -> IVec {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect())
}

fn to_matrix(rows: &[IVec]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect())
}

pub fn int_rank(rows: &[IVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    to_matrix(rows).rank()
}

/// A nonzero vector annihilated by every row, if one exists.
pub fn kernel_vector(rows: &[IVec], dim: usize) -> Option<IVec> {
    if rows.is_empty() {
        let mut v = vec![BigInt::zero(); dim];
        if dim > 0 {
            v[0] = BigInt::one();
            return Some(v);
        }
        return None;
    }
    let (r, pivots) = to_matrix(rows).rref();
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); dim];
    v[free] = Rational::one();
    for (i, &p) in pivots.iter().enumerate() {
        v[p] = -r.get(i, free).clone();
    }
    Some(primitive_from_rational(&v))
}

fn bits(n: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for m in members {
        b.insert(m);
    }
    b
}

/// Extreme rays of `{x : a·x ≥ 0 for every a}`.
///
/// Fails with a witness direction when the cone contains a line.
pub fn extreme_rays(dim: usize, constraints: &[IVec]) -> std::result::Result<Vec<IVec>, IVec> {
    let m = constraints.len();
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<IVec> = Vec::new();
    for (i, a) in constraints.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        basis_rows.push(a.clone());
        if int_rank(&basis_rows) == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < dim {
        return Err(kernel_vector(constraints, dim).expect("rank deficit implies a kernel"));
    }

    let inv = to_matrix(&basis_rows).inverse().expect("independent rows");
    let mut rays: Vec<IVec> = Vec::with_capacity(dim);
    let mut zeros: Vec<FixedBitSet> = Vec::with_capacity(dim);
    for c in 0..dim {
        let col: Vec<Rational> = (0..dim).map(|r| inv.get(r, c).clone()).collect();
        rays.push(primitive_from_rational(&col));
        zeros.push(bits(m, basis.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &i)| i)));
    }

    let in_basis = bits(m, basis.iter().copied());
    for (idx, a) in constraints.iter().enumerate() {
        if in_basis.contains(idx) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if minus.is_empty() {
            for (i, z) in zeros.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    z.insert(idx);
                }
            }
            continue;
        }
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let mut common = zeros[p].clone();
                common.intersect_with(&zeros[q]);
                if common.count_ones(..) + 2 < dim {
                    continue;
                }
                let blocked = (0..rays.len()).any(|t| t != p && t != q && common.is_subset(&zeros[t]));
                if blocked {
                    continue;
                }
                let r: IVec = rays[q].iter().zip(&rays[p]).map(|(x, y)| &vals[p] * x - &vals[q] * y).collect();
                common.insert(idx);
                new_rays.push(primitive(r));
                new_zeros.push(common);
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_zeros = Vec::new();
        for i in 0..rays.len() {
            if vals[i].is_negative() {
                continue;
            }
            let mut z = zeros[i].clone();
            if vals[i].is_zero() {
                z.insert(idx);
            }
            kept_rays.push(rays[i].clone());
            kept_zeros.push(z);
        }
        kept_rays.extend(new_rays);
        kept_zeros.extend(new_zeros);
        rays = kept_rays;
        zeros = kept_zeros;
    }
    Ok(rays)
}

/// A full-dimensional pointed cone with both descriptions and their incidences.
#[derive(Clone, Debug)]
pub struct Cone {
    pub dim: usize,
    pub rays: Vec<IVec>,
    /// Irredundant inner normals: `a·x ≥ 0` on the cone.
    pub facets: Vec<IVec>,
    /// For each facet, the rays lying on it.
    pub incidence: Vec<FixedBitSet>,
}

impl Cone {
    fn assemble(dim: usize, rays: Vec<IVec>, normals: &[IVec]) -> Cone {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut sets: Vec<(FixedBitSet, IVec)> = Vec::new();
        for a in normals {
            let on = bits(rays.len(), (0..rays.len()).filter(|&i| dot(a, &rays[i]).is_zero()));
            if on.count_ones(..) == rays.len() {
                continue;
            }
            if seen.insert(on.ones().collect()) {
                sets.push((on, primitive(a.clone())));
            }
        }
        let maximal: Vec<usize> = (0..sets.len())
            .filter(|&i| !(0..sets.len()).any(|j| j != i && sets[i].0.is_subset(&sets[j].0) && sets[i].0 != sets[j].0))
            .collect();
        let facets = maximal.iter().map(|&i| sets[i].1.clone()).collect();
        let incidence = maximal.iter().map(|&i| sets[i].0.clone()).collect();
        Cone { dim, rays, facets, incidence }
    }

    /// From inequalities `a·x ≥ 0`. The cone must be full-dimensional; a line is reported as `Err`.
    pub fn from_inequalities(dim: usize, constraints: &[IVec]) -> std::result::Result<Cone, IVec> {
        let rays = extreme_rays(dim, constraints)?;
        Ok(Cone::assemble(dim, rays, constraints))
    }

    /// From generators spanning a full-dimensional pointed cone.
    pub fn from_generators(dim: usize, generators: &[IVec]) -> Cone {
        let normals = extreme_rays(dim, generators).expect("generators of a pointed cone span a full-dimensional dual");
        let rays = extreme_rays(dim, &normals).expect("facets of a full-dimensional cone");
        Cone::assemble(dim, rays, &normals)
    }

    pub fn all_rays(&self) -> FixedBitSet {
        bits(self.rays.len(), 0..self.rays.len())
    }

    /// Facets of the face `f`: maximal proper intersections with facets of the cone.
    pub fn subfaces(&self, f: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut cands: Vec<FixedBitSet> = Vec::new();
        for inc in &self.incidence {
            if f.is_subset(inc) {
                continue;
            }
            let mut g = f.clone();
            g.intersect_with(inc);
            if !cands.contains(&g) {
                cands.push(g);
            }
        }
        let keep: Vec<bool> =
            (0..cands.len()).map(|i| !(0..cands.len()).any(|j| j != i && cands[i].is_subset(&cands[j]))).collect();
        cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
    }

    /// Number of faces by linear dimension, from the apex (dimension 0) to the cone itself.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 1];
        let mut level: Vec<FixedBitSet> = vec![self.all_rays()];
        counts[self.dim] = 1;
        for d in (0..self.dim).rev() {
            let mut next: Vec<FixedBitSet> = Vec::new();
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            for f in &level {
                for g in self.subfaces(f) {
                    if seen.insert(g.ones().collect()) {
                        next.push(g);
                    }
                }
            }
            counts[d] = next.len();
            level = next;
        }
        counts
    }

    /// Pulling triangulation in ray-index order: simplicial cones as lists of `dim` ray indices.
    pub fn triangulate(&self) -> Vec<Vec<usize>> {
        let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        self.pull(&self.all_rays(), self.dim, &mut memo)
    }

    fn pull(&self, f: &FixedBitSet, d: usize, memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        let members: Vec<usize> = f.ones().collect();
        if members.len() == d {
            return vec![members];
        }
        if let Some(hit) = memo.get(&members) {
            return hit.clone();
        }
        let apex = members[0];
        let mut out = Vec::new();
        for g in self.subfaces(f) {
            if g.contains(apex) {
                continue;
            }
            for mut s in self.pull(&g, d - 1, memo) {
                s.insert(0, apex);
                out.push(s);
            }
        }
        memo.insert(members, out.clone());
        out
    }
}

/// Absolute determinant of a square integer matrix given by rows.
pub fn abs_det(rows: &[IVec]) -> BigInt {
    to_matrix(rows).det().to_integer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant_and_its_dual() {
        let h: Vec<IVec> = (0..3).map(|i| ivec(&[(i == 0) as i64, (i == 1) as i64, (i == 2) as i64])).collect();
        let c = Cone::from_inequalities(3, &h).unwrap();
        assert_eq!(c.rays.len(), 3);
        assert_eq!(c.facets.len(), 3);
        assert_eq!(c.face_counts(), vec![1, 3, 3, 1]);
        assert_eq!(c.triangulate().len(), 1);
    }

    #[test]
    fn square_cone_counts_and_triangulation() {
        // cone over the unit square at height one
        let gens: Vec<IVec> = [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]].iter().map(|v| ivec(v)).collect();
        let c = Cone::from_generators(3, &gens);
        assert_eq!(c.rays.len(), 4);
        assert_eq!(c.facets.len(), 4);
        assert_eq!(c.face_counts(), vec![1, 4, 4, 1]);
        let tri = c.triangulate();
        assert_eq!(tri.len(), 2);
        let vol: BigInt = tri.iter().map(|s| abs_det(&s.iter().map(|&i| c.rays[i].clone()).collect::<Vec<_>>())).sum();
        assert_eq!(vol, BigInt::from(2));
    }

    #[test]
    fn redundant_constraints_are_dropped() {
        let h: Vec<IVec> = [[1, 0], [0, 1], [1, 1], [2, 0]].iter().map(|v| ivec(v)).collect();
        let c = Cone::from_inequalities(2, &h).unwrap();
        assert_eq!(c.rays.len(), 2);
        assert_eq!(c.facets.len(), 2);
    }

    #[test]
    fn half_plane_has_a_line() {
        let h = vec![ivec(&[1, 0])];
        let err = Cone::from_inequalities(2, &h).unwrap_err();
        assert!(err[0].is_zero() && !err[1].is_zero());
    }

    #[test]
    fn cross_polytope_cone() {
        // octahedron: 6 vertices, 12 edges, 8 facets
        let mut gens = Vec::new();
        for i in 0..3 {
            for s in [1i64, -1] {
                let mut v = vec![1i64, 0, 0, 0];
                v[i + 1] = s;
                gens.push(ivec(&v));
            }
        }
        let c = Cone::from_generators(4, &gens);
        assert_eq!(c.face_counts(), vec![1, 6, 12, 8, 1]);
        let vol: BigInt =
            c.triangulate().iter().map(|s| abs_det(&s.iter().map(|&i| c.rays[i].clone()).collect::<Vec<_>>())).sum();
        // normalized volume 3! · 4/3
        assert_eq!(vol, BigInt::from(8));
    }
}

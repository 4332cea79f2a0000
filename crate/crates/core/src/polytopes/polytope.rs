//! Bounded full-dimensional polytopes with exact H- and V-representations.
//!
//! A polytope `P ⊂ R^d` is stored through its homogenization `{(t, t·x) : x ∈ P, t ≥ 0}`, so
//! face lattices and triangulations come from the cone machinery.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Matrix, Rational};
use crate::error::{Error, Result};
use crate::geometry::{maximize, primitive, primitive_from_rational, Cone, IVec, LpOutcome};

/// `a·x + b ≥ 0` with `(a, b)` a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    pub normal: IVec,
    pub offset: BigInt,
}

impl Inequality {
    pub fn new(normal: IVec, offset: BigInt) -> Self {
        let mut v = normal;
        v.push(offset);
        let mut v = primitive(v);
        let offset = v.pop().expect("nonempty");
        Inequality { normal: v, offset }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let lin: Rational = self.normal.iter().zip(x).map(|(a, v)| v * Rational::from_integer(a.clone())).sum();
        lin + Rational::from_integer(self.offset.clone())
    }
}

/// Face counts `(f_{-1}, f_0, …, f_d)`.
pub type FVector = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Polytope {
    pub dim: usize,
    pub facets: Vec<Inequality>,
    pub vertices: Vec<Vec<Rational>>,
    cone: Cone,
}

fn homogenize(v: &[Rational]) -> IVec {
    let mut h = Vec::with_capacity(v.len() + 1);
    h.push(Rational::one());
    h.extend(v.iter().cloned());
    primitive_from_rational(&h)
}

fn dehomogenize(r: &[BigInt]) -> Vec<Rational> {
    let t = Rational::from_integer(r[0].clone());
    r[1..].iter().map(|x| Rational::from_integer(x.clone()) / &t).collect()
}

impl Polytope {
    fn from_cone(dim: usize, cone: Cone) -> Result<Polytope> {
        if cone.rays.iter().any(|r| !r[0].is_positive()) {
            return Err(Error::InvalidInput("polyhedron is unbounded".into()));
        }
        let vertices = cone.rays.iter().map(|r| dehomogenize(r)).collect();
        let facets = cone.facets.iter().map(|f| Inequality::new(f[1..].to_vec(), f[0].clone())).collect();
        Ok(Polytope { dim, facets, vertices, cone })
    }

    /// From inequalities; the result must be bounded and full-dimensional.
    pub fn from_inequalities(dim: usize, ineqs: &[Inequality]) -> Result<Polytope> {
        let mut rows: Vec<IVec> = ineqs
            .iter()
            .map(|q| {
                let mut r = vec![q.offset.clone()];
                r.extend(q.normal.iter().cloned());
                r
            })
            .collect();
        let mut t = vec![BigInt::zero(); dim + 1];
        t[0] = BigInt::one();
        rows.push(t);
        let cone = Cone::from_inequalities(dim + 1, &rows)
            .map_err(|_| Error::InvalidInput("polyhedron is not full-dimensional or contains a line".into()))?;
        Polytope::from_cone(dim, cone)
    }

    /// Convex hull of points spanning `R^dim` affinely.
    pub fn from_vertices(dim: usize, points: &[Vec<Rational>]) -> Polytope {
        let gens: Vec<IVec> = points.iter().map(|p| homogenize(p)).collect();
        Polytope::from_cone(dim, Cone::from_generators(dim + 1, &gens)).expect("hull of points is bounded")
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn f_vector(&self) -> FVector {
        self.cone.face_counts()
    }

    /// `d!` times the Euclidean volume: the lattice-normalized volume.
    pub fn relative_volume(&self) -> Rational {
        let mut total = Rational::zero();
        for simplex in self.cone.triangulate() {
            let m = Matrix::from_rows(
                simplex
                    .iter()
                    .map(|&i| {
                        let mut row = vec![Rational::one()];
                        row.extend(self.vertices[i].iter().cloned());
                        row
                    })
                    .collect(),
            );
            total += m.det().abs();
        }
        total
    }

    /// Incidence: for each facet, the indices of vertices on it.
    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.cone.incidence.iter().map(|b| b.ones().collect()).collect()
    }

    pub fn contains_strictly(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| f.eval(x).is_positive())
    }

    /// Lattice points of `Z^dim` strictly inside.
    pub fn interior_lattice_points(&self) -> Vec<Vec<BigInt>> {
        strict_lattice_points(self.dim, &self.facets)
    }
}

/// Inequalities whose removal enlarges `{x : a·x + b ≥ 0}`, found by LP without a vertex enumeration.
///
/// For each `i`, minimizes `a_i·x + b_i` over the others together with `a_i·x + b_i ≥ -1`; the
/// inequality is a facet exactly when the minimum is negative. Duplicates count once.
pub fn irredundant_inequalities(ineqs: &[Inequality]) -> Vec<usize> {
    let row =
        |q: &Inequality| -> Vec<Rational> { q.normal.iter().map(|a| Rational::from_integer(-a.clone())).collect() };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (i, qi) in ineqs.iter().enumerate() {
        if !seen.insert(qi.clone()) {
            continue;
        }
        // rows -a·x ≤ b for the others, plus -a_i·x ≤ b_i + 1
        let mut a: Vec<Vec<Rational>> = Vec::with_capacity(ineqs.len());
        let mut b: Vec<Rational> = Vec::with_capacity(ineqs.len());
        for (j, qj) in ineqs.iter().enumerate() {
            if j != i && qj != qi {
                a.push(row(qj));
                b.push(Rational::from_integer(qj.offset.clone()));
            }
        }
        a.push(row(qi));
        b.push(Rational::from_integer(qi.offset.clone()) + Rational::one());
        let c: Vec<Rational> = row(qi);
        // maximize -a_i·x, i.e. minimize a_i·x
        if let LpOutcome::Optimal { value, .. } = maximize(&c, &a, &b) {
            if -value + Rational::from_integer(qi.offset.clone()) < Rational::zero() {
                out.push(i);
            }
        }
    }
    out
}

/// Integer points with `a·x + b > 0` for all inequalities, straight from the H-representation.
pub fn strict_lattice_points(dim: usize, ineqs: &[Inequality]) -> Vec<Vec<BigInt>> {
    // for integer x and b: a·x + b > 0 ⟺ a·x ≥ 1 - b
    let tightened: Vec<(IVec, BigInt)> =
        ineqs.iter().map(|f| (f.normal.clone(), -f.offset.clone() + BigInt::one())).collect();
    lattice_points(dim, &tightened)
}

/// All integer points of the bounded polyhedron `{x : a·x ≥ c}`, in lexicographic order.
pub fn lattice_points(dim: usize, rows: &[(IVec, BigInt)]) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut prefix: Vec<BigInt> = Vec::with_capacity(dim);
    lattice_dfs(dim, rows, &mut prefix, &mut out);
    out
}

fn lattice_dfs(dim: usize, rows: &[(IVec, BigInt)], prefix: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    let t = prefix.len();
    if t == dim {
        let ok = rows.iter().all(|(a, c)| a.iter().zip(prefix.iter()).map(|(x, y)| x * y).sum::<BigInt>() >= *c);
        if ok {
            out.push(prefix.clone());
        }
        return;
    }
    // remaining variables x_t..; constraint: -a_rest·x_rest ≤ a_fixed·prefix - c
    let free = dim - t;
    let a: Vec<Vec<Rational>> =
        rows.iter().map(|(row, _)| row[t..].iter().map(|v| Rational::from_integer(-v.clone())).collect()).collect();
    let b: Vec<Rational> = rows
        .iter()
        .map(|(row, c)| {
            let fixed: BigInt = row[..t].iter().zip(prefix.iter()).map(|(x, y)| x * y).sum();
            Rational::from_integer(fixed - c)
        })
        .collect();
    let mut obj = vec![Rational::zero(); free];
    obj[0] = Rational::one();
    let hi = match maximize(&obj, &a, &b) {
        LpOutcome::Optimal { value, .. } => value.floor().to_integer(),
        LpOutcome::Infeasible => return,
        LpOutcome::Unbounded => panic!("lattice enumeration needs a bounded polyhedron"),
    };
    obj[0] = -Rational::one();
    let lo = match maximize(&obj, &a, &b) {
        LpOutcome::Optimal { value, .. } => (-value).ceil().to_integer(),
        _ => return,
    };
    let mut v = lo;
    while v <= hi {
        prefix.push(v.clone());
        lattice_dfs(dim, rows, prefix, out);
        prefix.pop();
        v += 1;
    }
}

/// Alternating sum over the whole f-vector, including `f_{-1}` and `f_d`; zero for every polytope.
pub fn euler_characteristic(f: &FVector) -> i64 {
    f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

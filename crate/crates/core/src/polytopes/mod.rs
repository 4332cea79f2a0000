//! The lattice polytope Π_{k,n} around the PK point and the rank-graded root polytopes.
//!
//! Everything lives in row-sum-zero subspaces of `(k-1) × c` arrays. We work in the chart that
//! drops the last column of the array; it is unimodular for the row-sum-zero lattice, so
//! lattice points and normalized volumes are read off directly.

mod polytope;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use polytope::{
    euler_characteristic, irredundant_inequalities, lattice_points, strict_lattice_points, FVector, Inequality,
    Polytope,
};

use crate::algebra::{int, Rational};
use crate::error::Result;
use crate::kinematics::{gamma_prime, solve_eta_system, KSubset, KinematicPoint};
use crate::tropical::{claim_polynomials, Laurent};

/// Coordinates `(i, j)`, `1 ≤ i < k`, `1 ≤ j ≤ cols`, of a row-sum-zero array.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrayChart {
    pub rows: usize,
    pub cols: usize,
}

impl ArrayChart {
    pub fn new(rows: usize, cols: usize) -> Self {
        ArrayChart { rows, cols }
    }

    /// Dimension of the subspace, `rows · (cols - 1)`.
    pub fn dim(&self) -> usize {
        self.rows * (self.cols - 1)
    }

    /// Position of `(i, j)` in the full array, `1 ≤ j ≤ cols`.
    pub fn full_index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.cols + (j - 1)
    }

    /// Point in the chart from a full array with zero row sums.
    pub fn eliminate_point(&self, full: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 1..=self.rows {
            for j in 1..self.cols {
                out.push(full[self.full_index(i, j)].clone());
            }
        }
        out
    }

    /// Full array from a chart point, restoring `α_{i,cols} = -Σ_{j<cols} α_{i,j}`.
    pub fn restore_point(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            let row = &x[i * (self.cols - 1)..(i + 1) * (self.cols - 1)];
            out.extend(row.iter().cloned());
            out.push(-row.iter().sum::<Rational>());
        }
        out
    }

    /// A functional `φ·α` on full arrays, written in chart coordinates.
    pub fn eliminate_functional(&self, phi: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 1..=self.rows {
            let last = phi[self.full_index(i, self.cols)];
            for j in 1..self.cols {
                out.push(phi[self.full_index(i, j)] - last);
            }
        }
        out
    }
}

fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Indicator functional of `Σ_i α_{i,[a_i,b_i]}` for J on the `(k-1) × (n-k)` array.
pub fn facet_functional(j: &KSubset) -> Vec<i64> {
    let (k, n) = (j.k(), j.n());
    let chart = ArrayChart::new(k - 1, n - k);
    let mut phi = vec![0i64; (k - 1) * (n - k)];
    for i in 1..k {
        if let Some((a, b)) = j.row_interval(i) {
            for c in a..=b {
                phi[chart.full_index(i, c)] += 1;
            }
        }
    }
    phi
}

/// Facet inequalities of Π_{k,n} in chart coordinates, one per nonfrozen J in lex order.
pub fn pi_inequalities(k: usize, n: usize) -> Vec<(KSubset, Inequality)> {
    let chart = ArrayChart::new(k - 1, n - k);
    KSubset::nonfrozen(k, n)
        .into_iter()
        .map(|j| {
            let a = chart.eliminate_functional(&facet_functional(&j));
            (j, Inequality::new(to_big(&a), BigInt::one()))
        })
        .collect()
}

/// Facet count and interior lattice points of Π_{k,n} from its inequalities alone.
pub fn pi_facets_and_interior(k: usize, n: usize) -> (usize, Vec<Vec<BigInt>>) {
    let ineqs: Vec<Inequality> = pi_inequalities(k, n).into_iter().map(|(_, q)| q).collect();
    let dim = (k - 1) * (n - k - 1);
    (irredundant_inequalities(&ineqs).len(), strict_lattice_points(dim, &ineqs))
}

/// Π_{k,n} = {α ∈ H_{k,n} : Σ_i α_{i,[j_i-(i-1), j_{i+1}-i-1]} + 1 ≥ 0 for nonfrozen J}.
pub fn pi_polytope(k: usize, n: usize) -> Result<Polytope> {
    let ineqs: Vec<Inequality> = pi_inequalities(k, n).into_iter().map(|(_, q)| q).collect();
    Polytope::from_inequalities((k - 1) * (n - k - 1), &ineqs)
}

/// v_J (or v̂_J when `projected` is false) as a full `(k-1) × cols` array.
///
/// `v_J = Σ_λ (e_{λ, j_λ-(λ-1)} - e_{λ, j_{λ+1}-λ})`, with column indices read modulo `n-k` in the projected case.
pub fn root_vertex(j: &KSubset, projected: bool) -> Vec<i64> {
    let (k, n) = (j.k(), j.n());
    let cols = if projected { n - k } else { n - k + 1 };
    let chart = ArrayChart::new(k - 1, cols);
    let e = j.elements();
    let wrap = |c: usize| if projected { (c - 1) % (n - k) + 1 } else { c };
    let mut v = vec![0i64; (k - 1) * cols];
    for l in 1..k {
        v[chart.full_index(l, wrap(e[l - 1] + 1 - l))] += 1;
        v[chart.full_index(l, wrap(e[l] - l))] -= 1;
    }
    v
}

/// Generating points of R_{k,n} (projected) or R̂_{k,n}, as full arrays.
pub fn root_generators(k: usize, n: usize, projected: bool) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = KSubset::nonfrozen(k, n).iter().map(|j| root_vertex(j, projected)).collect();
    if !projected {
        let cols = n - k + 1;
        let chart = ArrayChart::new(k - 1, cols);
        pts.push(vec![0; (k - 1) * cols]);
        for i in 1..k {
            let mut v = vec![0i64; (k - 1) * cols];
            v[chart.full_index(i, 1)] = 1;
            v[chart.full_index(i, cols)] = -1;
            pts.push(v);
        }
    }
    pts
}

/// R_{k,n} (`projected = true`) or R̂_{k,n} in chart coordinates.
pub fn root_polytope(k: usize, n: usize, projected: bool) -> Polytope {
    let cols = if projected { n - k } else { n - k + 1 };
    let chart = ArrayChart::new(k - 1, cols);
    let pts: Vec<Vec<Rational>> =
        root_generators(k, n, projected).iter().map(|v| chart.eliminate_point(&to_rational(v))).collect();
    Polytope::from_vertices(chart.dim(), &pts)
}

/// `proj_{k,n}`: `e_{i,n-k+1} ↦ e_{i,1}` on full arrays.
pub fn project_root_point(k: usize, n: usize, v: &[i64]) -> Vec<i64> {
    let hat = ArrayChart::new(k - 1, n - k + 1);
    let low = ArrayChart::new(k - 1, n - k);
    let mut out = vec![0i64; (k - 1) * (n - k)];
    for i in 1..k {
        for c in 1..=n - k + 1 {
            let target = if c == n - k + 1 { 1 } else { c };
            out[low.full_index(i, target)] += v[hat.full_index(i, c)];
        }
    }
    out
}

/// Outcome of comparing R_{k,n} with the polar dual of Π_{k,n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub vertices_match_facets: bool,
    pub facets_match_vertices: bool,
    pub incidences_match: bool,
    pub f_vectors_reversed: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.vertices_match_facets && self.facets_match_vertices && self.incidences_match
    }
}

/// Pairing `⟨Σ c_{ij} f_{ij}, α⟩ = Σ c_{ij} α_{ij}` in chart coordinates: `B(x, α) = Σ_i Σ_j (Σ_{m ≤ j} x_{i,m}) α_{i,j}`.
fn pairing_transpose(chart: &ArrayChart, x: &[Rational]) -> Vec<Rational> {
    let w = chart.cols - 1;
    let mut out = Vec::with_capacity(x.len());
    for i in 0..chart.rows {
        let mut acc = Rational::zero();
        for j in 0..w {
            acc += &x[i * w + j];
            out.push(acc.clone());
        }
    }
    out
}

/// The point `α` with `B(x, α) = a·x` for all `x`: since `B(x, α) = Σ_m x_m Σ_{j ≥ m} α_j`,
/// `α_j = a_j - a_{j+1}`.
fn dual_point(chart: &ArrayChart, a: &[Rational]) -> Vec<Rational> {
    let w = chart.cols - 1;
    let mut out = Vec::with_capacity(a.len());
    for i in 0..chart.rows {
        for j in 0..w {
            let next = if j + 1 == w { Rational::zero() } else { a[i * w + j + 1].clone() };
            out.push(&a[i * w + j] - next);
        }
    }
    out
}

/// Checks that Π_{k,n} is the polar dual of R_{k,n} under the `f_{i,j} = e_{i,j} - e_{i,j+1}` pairing.
pub fn duality_check(k: usize, n: usize) -> Result<DualityReport> {
    let chart = ArrayChart::new(k - 1, n - k);
    let pi = pi_polytope(k, n)?;
    let r = root_polytope(k, n, true);
    let js = KSubset::nonfrozen(k, n);

    // v_J ↦ facet normal of J
    let normals: BTreeMap<Vec<Rational>, usize> = pi_inequalities(k, n)
        .iter()
        .enumerate()
        .map(|(idx, (_, q))| (q.normal.iter().map(|v| Rational::from_integer(v.clone())).collect(), idx))
        .collect();
    let mut vertex_to_facet: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ok_vf = r.vertices.len() == js.len() && pi.facets.len() == js.len();
    for (vi, v) in r.vertices.iter().enumerate() {
        match normals.get(&pairing_transpose(&chart, v)) {
            Some(&fi) => {
                vertex_to_facet.insert(vi, fi);
            }
            None => ok_vf = false,
        }
    }
    // facets of R, a·x + b ≥ 0 with b > 0, ↦ points α with B(x, α) = (a/b)·x
    let pi_vertices: BTreeMap<Vec<Rational>, usize> =
        pi.vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut facet_to_vertex: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ok_fv = r.facets.len() == pi.vertices.len();
    for (fi, f) in r.facets.iter().enumerate() {
        if f.offset <= BigInt::zero() {
            ok_fv = false;
            continue;
        }
        let b = Rational::from_integer(f.offset.clone());
        let a: Vec<Rational> = f.normal.iter().map(|v| Rational::from_integer(v.clone()) / &b).collect();
        match pi_vertices.get(&dual_point(&chart, &a)) {
            Some(&pv) => {
                facet_to_vertex.insert(fi, pv);
            }
            None => ok_fv = false,
        }
    }
    // v on facet F of R  ⟺  vertex(F) on facet(v) of Π
    let mut ok_inc = ok_vf && ok_fv;
    if ok_inc {
        let pi_normals = pi_inequalities(k, n);
        for (fi, verts) in r.facet_vertex_sets().iter().enumerate() {
            let alpha = &pi.vertices[facet_to_vertex[&fi]];
            for vi in 0..r.vertices.len() {
                let q = &pi_normals[vertex_to_facet[&vi]].1;
                let tight = q.eval(alpha).is_zero();
                if tight != verts.contains(&vi) {
                    ok_inc = false;
                }
            }
        }
    }
    let mut rev = pi.f_vector();
    rev.reverse();
    Ok(DualityReport {
        vertices_match_facets: ok_vf,
        facets_match_vertices: ok_fv,
        incidences_match: ok_inc,
        f_vectors_reversed: rev == r.f_vector(),
    })
}

/// Exponent vectors of `∏P_i ∏Q_j / ∏x_{i,j}` on the `(k-1) × (n-k)` array.
pub fn newton_support(k: usize, n: usize) -> Vec<Vec<i64>> {
    let (p, q) = claim_polynomials(k, n);
    let vars = (k - 1) * (n - k);
    let mut prod = Laurent::one(vars);
    for poly in p.iter().chain(q.iter()) {
        prod = prod.mul(poly);
        // keep only the support; coefficients are positive so nothing cancels
        let support: Vec<Vec<i32>> = prod.terms().map(|(e, _)| e.clone()).collect();
        prod = support.into_iter().fold(Laurent::zero(vars), |acc, e| acc.add(&Laurent::monomial(e, BigInt::one())));
    }
    prod.terms().map(|(e, _)| e.iter().map(|&v| v as i64 - 1).collect()).collect()
}

/// Newton polytope of the PK Laurent polynomial equals Π_{k,n}; also reports that every exponent lies in H_{k,n}.
pub fn newton_polytope_check(k: usize, n: usize) -> Result<(bool, bool)> {
    let chart = ArrayChart::new(k - 1, n - k);
    let support = newton_support(k, n);
    let in_subspace =
        support.iter().all(|e| (1..k).all(|i| (1..=n - k).map(|j| e[chart.full_index(i, j)]).sum::<i64>() == 0));
    if !in_subspace {
        return Ok((false, false));
    }
    let pts: Vec<Vec<Rational>> = support.iter().map(|e| chart.eliminate_point(&to_rational(e))).collect();
    let newton = Polytope::from_vertices(chart.dim(), &pts);
    let pi = pi_polytope(k, n)?;
    let a: BTreeSet<Vec<Rational>> = newton.vertices.iter().cloned().collect();
    let b: BTreeSet<Vec<Rational>> = pi.vertices.iter().cloned().collect();
    Ok((a == b, in_subspace))
}

/// Outcome of slicing R_{k,n} at `α_{i,·} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Vertices of the slice equal `{v_J : j_i + 1 = j_{i+1}}`.
    pub vertices_match: bool,
    /// After deleting row `i`, they are exactly the vertices of R_{k-1,n-1}.
    pub isomorphic: bool,
}

/// The i-th graded embedding `R_{k-1,n-1} ↪ R_{k,n}`.
pub fn graded_embedding_check(k: usize, n: usize, i: usize) -> Result<EmbeddingReport> {
    assert!(k >= 3 && (1..k).contains(&i), "need k ≥ 3 and 1 ≤ i < k");
    let chart = ArrayChart::new(k - 1, n - k);
    let w = n - k - 1;
    let r = root_polytope(k, n, true);

    // slice: substitute the zero row, keep the other coordinates
    let keep: Vec<usize> = (0..chart.dim()).filter(|&c| c / w != i - 1).collect();
    let sliced: Vec<Inequality> = r
        .facets
        .iter()
        .map(|f| Inequality::new(keep.iter().map(|&c| f.normal[c].clone()).collect(), f.offset.clone()))
        .filter(|q| q.normal.iter().any(|v| !v.is_zero()))
        .collect();
    let slice = Polytope::from_inequalities(keep.len(), &sliced)?;
    let slice_vertices: BTreeSet<Vec<Rational>> = slice.vertices.iter().cloned().collect();

    let expected: BTreeSet<Vec<Rational>> = KSubset::nonfrozen(k, n)
        .iter()
        .filter(|j| j.elements()[i - 1] + 1 == j.elements()[i])
        .map(|j| {
            let x = chart.eliminate_point(&to_rational(&root_vertex(j, true)));
            debug_assert!(x[(i - 1) * w..i * w].iter().all(Zero::is_zero));
            keep.iter().map(|&c| x[c].clone()).collect()
        })
        .collect();
    let smaller: BTreeSet<Vec<Rational>> = root_polytope(k - 1, n - 1, true).vertices.into_iter().collect();
    Ok(EmbeddingReport { vertices_match: slice_vertices == expected, isomorphic: expected == smaller })
}

/// The kinematic point `Ψ(α)`: `η_J = γ'_J(α) + 1` on nonfrozen J.
pub fn psi_embedding(k: usize, n: usize, alpha: &[Vec<Rational>]) -> Result<KinematicPoint> {
    let targets = KSubset::nonfrozen(k, n).into_iter().map(|j| {
        let t = gamma_prime(&j, alpha) + Rational::one();
        (j, t)
    });
    solve_eta_system(k, n, &targets.collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_36_matches_example() {
        let pi = pi_polytope(3, 6).unwrap();
        assert_eq!(pi.facets.len(), 14);
        assert_eq!(pi.f_vector(), vec![1, 27, 60, 47, 14, 1]);
        assert_eq!(pi.interior_lattice_points(), vec![vec![BigInt::zero(); 4]]);
    }

    #[test]
    fn r_36_vertex_table_and_f_vector() {
        let j = KSubset::new(6, vec![1, 3, 6]).unwrap();
        let chart = ArrayChart::new(2, 3);
        // e11 - e12 - e21 + e22
        let mut want = vec![0i64; 6];
        want[chart.full_index(1, 1)] = 1;
        want[chart.full_index(1, 2)] = -1;
        want[chart.full_index(2, 1)] = -1;
        want[chart.full_index(2, 2)] = 1;
        assert_eq!(root_vertex(&j, true), want);
        let r = root_polytope(3, 6, true);
        assert_eq!(r.f_vector(), vec![1, 14, 47, 60, 27, 1]);
        assert_eq!(r.relative_volume(), int(42));
    }

    #[test]
    fn r_25_is_a_pentagon_of_area_five_halves() {
        let r = root_polytope(2, 5, true);
        assert_eq!(r.vertices.len(), 5);
        assert_eq!(r.relative_volume(), int(5));
    }
}

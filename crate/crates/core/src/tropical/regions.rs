//! Linearity regions of the tropical integrand and their exact Laplace integrals.
//!
//! Every min-term is homogeneous, so each region is a polyhedral cone at the origin and
//! `∫_C exp(ℓ·x) dx = Σ_σ |det σ| / ∏_{r ∈ σ} (-ℓ·r)` over any triangulation of `C` by its
//! extreme rays. When `ℓ` is negative on every extreme ray it is negative on every ray used,
//! so no perturbation of `ℓ` is ever needed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{format_rational, int, Rational};
use crate::error::{Error, Result};
use crate::geometry::{abs_det, strict_interior_point, Cone, IVec};

use super::integrand::Integrand;

/// A full-dimensional cell on which the integrand is linear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearityRegion {
    /// Index of the minimizing form chosen in each min-term.
    pub choice: Vec<usize>,
    /// Inner normals `a` with `a·x ≥ 0` on the region.
    pub inequalities: Vec<IVec>,
    /// The integrand restricted to the region.
    pub form: Vec<Rational>,
    pub interior: Vec<Rational>,
}

impl LinearityRegion {
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.choice.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn positive_at(v: &[i64], x: &[Rational]) -> bool {
    v.iter().zip(x).filter(|(a, _)| **a != 0).map(|(a, y)| y * int(*a)).sum::<Rational>().is_positive()
}

/// Full-dimensional cells of the common refinement of the argmin fans, visiting min-terms in `order`.
pub fn enumerate_regions_ordered(f: &Integrand, order: &[usize]) -> Vec<LinearityRegion> {
    let d = f.dim;
    let mut out = Vec::new();
    let mut choice = vec![0usize; f.terms.len()];
    let start = vec![Rational::zero(); d];
    dfs(f, order, 0, &mut choice, &mut Vec::new(), &start, &mut out);
    out.sort_by(|a, b| a.choice.cmp(&b.choice));
    out
}

/// Regions in the default min-term order.
pub fn enumerate_regions(f: &Integrand) -> Vec<LinearityRegion> {
    let order: Vec<usize> = (0..f.terms.len()).collect();
    enumerate_regions_ordered(f, &order)
}

fn dfs(
    f: &Integrand,
    order: &[usize],
    depth: usize,
    choice: &mut Vec<usize>,
    constraints: &mut Vec<Vec<i64>>,
    witness: &[Rational],
    out: &mut Vec<LinearityRegion>,
) {
    if depth == order.len() {
        let mut form = f.linear.clone();
        for (t, &c) in f.terms.iter().zip(choice.iter()) {
            for (l, v) in form.iter_mut().zip(&t.expr.forms()[c]) {
                if *v != 0 {
                    *l += &t.coeff * int(*v);
                }
            }
        }
        out.push(LinearityRegion {
            choice: choice.clone(),
            inequalities: constraints.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
            form,
            interior: witness.to_vec(),
        });
        return;
    }
    let t = order[depth];
    let forms = f.terms[t].expr.forms();
    for (ci, a) in forms.iter().enumerate() {
        let new: Vec<Vec<i64>> =
            forms.iter().enumerate().filter(|(bi, _)| *bi != ci).map(|(_, b)| diff(b, a)).collect();
        let base = constraints.len();
        constraints.extend(new.iter().cloned());
        let point = if depth > 0 && new.iter().all(|v| positive_at(v, witness)) {
            Some(witness.to_vec())
        } else {
            let rows: Vec<Vec<Rational>> = constraints.iter().map(|r| r.iter().map(|&v| int(-v)).collect()).collect();
            let rhs = vec![Rational::zero(); rows.len()];
            strict_interior_point(&rows, &rhs)
        };
        if let Some(p) = point {
            choice[t] = ci;
            dfs(f, order, depth + 1, choice, constraints, &p, out);
        }
        constraints.truncate(base);
    }
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect()
}

fn apply(form: &[Rational], ray: &[BigInt]) -> Rational {
    form.iter().zip(ray).map(|(a, r)| a * Rational::from_integer(r.clone())).sum()
}

/// Exact `∫_region exp(form · x) dx`.
pub fn integrate_region(r: &LinearityRegion) -> Result<Rational> {
    let d = r.form.len();
    if d == 0 {
        return Ok(int(1));
    }
    let cone = Cone::from_inequalities(d, &r.inequalities).map_err(|line| Error::Divergent {
        region: r.label(),
        ray: to_i64(&line),
        value: "line in region".into(),
    })?;
    let vals: Vec<Rational> = cone.rays.iter().map(|ray| apply(&r.form, ray)).collect();
    if let Some(i) = vals.iter().position(|v| !v.is_negative()) {
        return Err(Error::Divergent {
            region: r.label(),
            ray: to_i64(&cone.rays[i]),
            value: format_rational(&vals[i]),
        });
    }
    let mut total = Rational::zero();
    for simplex in cone.triangulate() {
        let rows: Vec<IVec> = simplex.iter().map(|&i| cone.rays[i].clone()).collect();
        let det = Rational::from_integer(abs_det(&rows));
        let denom: Rational = simplex.iter().map(|&i| -&vals[i]).product();
        total += det / denom;
    }
    Ok(total)
}

/// Region values, total and value histogram of one tropical evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct TropicalReport {
    pub regions: Vec<(LinearityRegion, Rational)>,
    pub total: Rational,
    /// `(value, frequency)` sorted by value.
    pub histogram: Vec<(Rational, usize)>,
}

/// Integrate over all regions, in parallel.
pub fn evaluate_regions(regions: Vec<LinearityRegion>) -> Result<TropicalReport> {
    let values: Vec<Result<Rational>> = regions.par_iter().map(integrate_region).collect();
    let mut pairs = Vec::with_capacity(regions.len());
    let mut total = Rational::zero();
    let mut hist: BTreeMap<Rational, usize> = BTreeMap::new();
    for (r, v) in regions.into_iter().zip(values) {
        let v = v?;
        total += &v;
        *hist.entry(v.clone()).or_insert(0) += 1;
        pairs.push((r, v));
    }
    Ok(TropicalReport { regions: pairs, total, histogram: hist.into_iter().collect() })
}

pub fn evaluate_integrand(f: &Integrand) -> Result<TropicalReport> {
    evaluate_regions(enumerate_regions(f))
}

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::potential::composite_index;
use super::PointConfiguration;
use crate::algebra::{Field, Matrix, Rational};
use crate::error::{Error, Result};
use crate::kinematics::KSubset;

/// Rows/columns of the Hessian removed before taking its determinant (0-based composite indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeChoice {
    pub deleted_rows: Vec<usize>,
    pub deleted_cols: Vec<usize>,
}

impl GaugeChoice {
    pub fn symmetric(indices: Vec<usize>) -> Self {
        GaugeChoice { deleted_rows: indices.clone(), deleted_cols: indices }
    }

    /// Delete every coordinate of the points in a frame.
    pub fn from_frame(k: usize, frame: &[usize]) -> Self {
        let idx = frame.iter().flat_map(|&a| (1..k).map(move |i| composite_index(k, a, i))).collect();
        GaugeChoice::symmetric(idx)
    }
}

/// sl(k) basis: diagonal differences E_aa - E_{a+1,a+1}, then off-diagonal units E_pq in lexicographic order.
pub fn sl_generators(k: usize) -> Vec<Vec<Vec<i64>>> {
    let mut gens = Vec::new();
    for a in 0..k - 1 {
        let mut m = vec![vec![0; k]; k];
        m[a][a] = 1;
        m[a + 1][a + 1] = -1;
        gens.push(m);
    }
    for p in 0..k {
        for q in 0..k {
            if p != q {
                let mut m = vec![vec![0; k]; k];
                m[p][q] = 1;
                gens.push(m);
            }
        }
    }
    gens
}

/// (k²-1) × (k-1)n matrix whose rows are the projective vector fields δx_i = (Mv)_{i+1} - x_i (Mv)_1.
pub fn null_space_matrix<F: Field>(c: &PointConfiguration<F>) -> Matrix<F> {
    let (k, n) = (c.k(), c.n());
    let like = c.entry(0, 1).clone();
    let gens = sl_generators(k);
    let mut out = Matrix::from_fn(gens.len(), (k - 1) * n, |_, _| like.zero_like());
    for (g_idx, m) in gens.iter().enumerate() {
        for a in 1..=n {
            let v: Vec<F> = (0..k).map(|r| c.entry(r, a).clone()).collect();
            let mv: Vec<F> = (0..k)
                .map(|r| {
                    (0..k).fold(like.zero_like(), |acc, t| {
                        if m[r][t] == 0 {
                            acc
                        } else {
                            acc.plus(&v[t].times(&like.from_int_like(m[r][t])))
                        }
                    })
                })
                .collect();
            for i in 1..k {
                let val = mv[i].minus(&v[i].times(&mv[0]));
                out.set(g_idx, composite_index(k, a, i), val);
            }
        }
    }
    out
}

/// [I]: determinant of the columns I of the null-space matrix.
pub fn null_space_minor<F: Field>(v: &Matrix<F>, cols: &[usize]) -> F {
    let rows: Vec<usize> = (0..v.rows()).collect();
    v.select(&rows, cols).det()
}

/// V_A = ∏_i p_{A \ a_i}.
pub fn generalized_vandermonde<F: Field>(c: &PointConfiguration<F>, a: &[usize]) -> F {
    let mut acc = c.entry(0, 1).one_like();
    for skip in 0..a.len() {
        let cols: Vec<usize> = a.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
        acc = acc.times(&c.minor_ordered(&cols));
        if acc.vanishes() {
            break;
        }
    }
    acc
}

/// First (k+1)-subset in lexicographic order with nonzero generalized Vandermonde.
pub fn find_frame<F: Field>(c: &PointConfiguration<F>) -> Option<Vec<usize>> {
    KSubset::all(c.k() + 1, c.n())
        .into_iter()
        .map(|s| s.elements().to_vec())
        .find(|a| !generalized_vandermonde(c, a).vanishes())
}

/// Lexicographically first set of k²-1 composite indices with nonzero null-space minor.
pub fn first_valid_gauge<F: Field>(c: &PointConfiguration<F>) -> Result<GaugeChoice> {
    let v = null_space_matrix(c);
    let (_, pivots) = v.rref();
    if pivots.len() < v.rows() {
        return Err(Error::InvalidGauge(format!("null-space matrix has rank {} < {}", pivots.len(), v.rows())));
    }
    Ok(GaugeChoice::symmetric(pivots))
}

/// Zero test for quantities whose nonvanishing was already certified exactly: inexact fields only
/// reject a literal zero, since genuine values at PK can be far below any fixed tolerance.
pub(crate) fn exactly_zero<F: Field>(x: &F) -> bool {
    if F::EXACT {
        x.vanishes()
    } else {
        x.magnitude() == 0.0
    }
}

fn parity(indices: &[usize]) -> bool {
    indices.iter().map(|&i| i + 1).sum::<usize>() % 2 == 1
}

/// 𝒩 · (-1)^{ΣI+ΣJ} det(Ψ with the gauge's rows/cols deleted) / ([I][J]).
pub fn reduced_determinant_general<F: Field>(
    c: &PointConfiguration<F>,
    psi: &Matrix<F>,
    g: &GaugeChoice,
    normalization: &Rational,
) -> Result<F> {
    let v = null_space_matrix(c);
    let mi = null_space_minor(&v, &g.deleted_rows);
    let mj = if g.deleted_rows == g.deleted_cols { mi.clone() } else { null_space_minor(&v, &g.deleted_cols) };
    if exactly_zero(&mi) || exactly_zero(&mj) {
        return Err(Error::InvalidGauge("null-space minor vanishes".into()));
    }
    let reduced = psi.delete(&g.deleted_rows, &g.deleted_cols);
    let mut d = reduced.det().times(&mi.from_rational_like(normalization));
    if parity(&g.deleted_rows) != parity(&g.deleted_cols) {
        d = d.negate();
    }
    Ok(d.divide(&mi.times(&mj)).expect("nonzero minors"))
}

/// det(Ψ with the frame's coordinates deleted) / V_A².
pub fn reduced_determinant_framed<F: Field>(c: &PointConfiguration<F>, psi: &Matrix<F>, frame: &[usize]) -> Result<F> {
    let va = generalized_vandermonde(c, frame);
    if exactly_zero(&va) {
        return Err(Error::InvalidGauge(format!("{frame:?} is not a frame")));
    }
    let g = GaugeChoice::from_frame(c.k(), frame);
    let reduced = psi.delete(&g.deleted_rows, &g.deleted_cols);
    Ok(reduced.det().divide(&va.times(&va)).expect("nonzero Vandermonde"))
}

/// ([I_A] / V_A) for a frame A: the ratio whose square is 𝒩_k.
pub fn frame_ratio<F: Field>(c: &PointConfiguration<F>, frame: &[usize]) -> Option<F> {
    let va = generalized_vandermonde(c, frame);
    let v = null_space_matrix(c);
    let g = GaugeChoice::from_frame(c.k(), frame);
    null_space_minor(&v, &g.deleted_rows).divide(&va)
}

/// 𝒩_k, calibrated once per k by matching the framed formula on a generic exact configuration.
pub fn normalization_constant(k: usize) -> Rational {
    static CACHE: OnceLock<Mutex<HashMap<usize, Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&k) {
        return v.clone();
    }
    let c = generic_rational_configuration(k, k + 1);
    let frame: Vec<usize> = (1..=k + 1).collect();
    let ratio = frame_ratio(&c, &frame).expect("generic configuration is framed");
    let value = &ratio * &ratio;
    cache.lock().unwrap().insert(k, value.clone());
    value
}

/// Deterministic configuration with columns (1, t, t², ...) at distinct small rationals t, plus a shear.
pub fn generic_rational_configuration(k: usize, n: usize) -> PointConfiguration<Rational> {
    let m = Matrix::from_fn(k, n, |r, c| {
        let t = Rational::new((c as i64 * 3 + 2).into(), (c as i64 + 5).into());
        let shear = ((r * 7 + c * 2) % 5) as i64 * i64::from(r > 0);
        num_traits::pow(t, r) + Rational::new(shear.into(), 11i64.into())
    });
    PointConfiguration::new(m)
}

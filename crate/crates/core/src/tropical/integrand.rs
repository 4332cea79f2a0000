//! Tropicalization and the piecewise-linear exponent of the tropical integral.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{format_rational, int, Rational};
use crate::error::{Error, Result};
use crate::kinematics::KinematicPoint;

use super::laurent::Laurent;
use super::web::{claim_polynomials, claim_to_web, WebChart};

/// `min_i (f_i · x)` over integer linear forms, deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TropicalExpression {
    forms: Vec<Vec<i64>>,
}

impl TropicalExpression {
    pub fn new(mut forms: Vec<Vec<i64>>) -> Self {
        assert!(!forms.is_empty(), "tropical expression needs at least one form");
        forms.sort();
        forms.dedup();
        TropicalExpression { forms }
    }

    pub fn forms(&self) -> &[Vec<i64>] {
        &self.forms
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.forms.iter().map(|f| apply(f, x)).min().expect("nonempty")
    }

    /// Split off the lexicographically smallest form: `min(f) = f_0·x + min(f - f_0)`.
    pub fn normalized(&self) -> (Vec<i64>, TropicalExpression) {
        let base = self.forms[0].clone();
        let rest = self.forms.iter().map(|f| f.iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
        (base, TropicalExpression::new(rest))
    }
}

fn apply(f: &[i64], x: &[Rational]) -> Rational {
    f.iter().zip(x).filter(|(a, _)| **a != 0).map(|(a, v)| v * int(*a)).sum()
}

/// Min over the support of `p`, reading exponents as linear forms.
pub fn tropicalize(p: &Laurent) -> TropicalExpression {
    TropicalExpression::new(p.terms().map(|(e, _)| e.iter().map(|&v| v as i64).collect()).collect())
}

/// One nonlinear summand `c · min(forms)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinTerm {
    pub coeff: Rational,
    pub expr: TropicalExpression,
}

/// `linear·x + Σ c_i min(F_i x)` on `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrand {
    pub dim: usize,
    pub linear: Vec<Rational>,
    pub terms: Vec<MinTerm>,
    pub var_names: Vec<String>,
}

impl Integrand {
    /// Collect `Σ c · trop(p)`, factoring common monomials and merging equal min-terms.
    pub fn from_weighted(dim: usize, parts: impl IntoIterator<Item = (Rational, TropicalExpression)>) -> Integrand {
        let mut linear = vec![Rational::zero(); dim];
        let mut merged: BTreeMap<TropicalExpression, Rational> = BTreeMap::new();
        for (c, expr) in parts {
            if c.is_zero() {
                continue;
            }
            let (base, rest) = expr.normalized();
            for (l, b) in linear.iter_mut().zip(&base) {
                if *b != 0 {
                    *l += &c * int(*b);
                }
            }
            if rest.forms.len() > 1 {
                *merged.entry(rest).or_insert_with(Rational::zero) += c;
            }
        }
        let terms =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(expr, coeff)| MinTerm { coeff, expr }).collect();
        Integrand { dim, linear, terms, var_names: (1..=dim).map(|i| format!("z{i}")).collect() }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let lin: Rational = self.linear.iter().zip(x).map(|(a, b)| a * b).sum();
        lin + self.terms.iter().map(|t| &t.coeff * t.expr.eval(x)).sum::<Rational>()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.linear.iter().all(Zero::is_zero)
    }

    fn render_form(&self, f: &[i64]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in f.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = &self.var_names[i];
            let s = match c {
                1 => format!("+{name}"),
                -1 => format!("-{name}"),
                _ if c > 0 => format!("+{c}{name}"),
                _ => format!("{c}{name}"),
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let joined = parts.concat();
        joined.strip_prefix('+').map(str::to_string).unwrap_or(joined)
    }
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces = Vec::new();
        for (i, c) in self.linear.iter().enumerate() {
            if !c.is_zero() {
                pieces.push(format!("{}*{}", format_rational(c), self.var_names[i]));
            }
        }
        for t in &self.terms {
            let inner: Vec<String> = t.expr.forms().iter().map(|g| self.render_form(g)).collect();
            pieces.push(format!("{}*min({})", format_rational(&t.coeff), inner.join(", ")));
        }
        if pieces.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", pieces.join(" + "))
    }
}

/// `Σ_J (-s_J) ||J||` in the reduced web chart.
pub fn build_integrand(s: &KinematicPoint) -> Result<Integrand> {
    if !s.is_conserving() {
        return Err(Error::InvalidInput("kinematic point violates momentum conservation".into()));
    }
    let chart = WebChart::new(s.k(), s.n());
    let matrix = chart.matrix();
    let parts: Vec<(Rational, TropicalExpression)> = s
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (-v.clone(), tropicalize(&chart.minor(&matrix, j))))
        .collect();
    let mut f = Integrand::from_weighted(chart.dim(), parts);
    f.var_names = (0..chart.dim()).map(|i| chart.var_name(i)).collect();
    Ok(f)
}

/// Tropicalization of `∏P_i ∏Q_j / ∏x_{i,j}` with the torus fixed by `x_{i,c} = 1`, `c = fixed_column`.
///
/// With `fixed_column = 1` and the relabelling of [`claim_to_web`], this is the planar-kinematics
/// integrand in the web chart; any other column gives an equivalent chart.
pub fn claim_integrand(k: usize, n: usize, fixed_column: usize) -> Integrand {
    let cols = n - k;
    assert!((1..=cols).contains(&fixed_column), "fixed column out of range");
    let (p, q) = claim_polynomials(k, n);
    let total = (k - 1) * cols;
    let kept: Vec<usize> = (0..total).filter(|idx| idx % cols + 1 != fixed_column).collect();
    let reduce = |poly: &Laurent| poly.relabel(kept.len(), |idx| kept.iter().position(|&v| v == idx));
    let mut parts: Vec<(Rational, TropicalExpression)> = Vec::new();
    for poly in p.iter().chain(q.iter()) {
        parts.push((int(1), tropicalize(&reduce(poly))));
    }
    let mut f = Integrand::from_weighted(kept.len(), parts);
    for (pos, _) in kept.iter().enumerate() {
        f.linear[pos] -= int(1);
    }
    f.var_names = kept.iter().map(|idx| format!("x{}_{}", idx / cols + 1, idx % cols + 1)).collect();
    f
}

/// Checks `∏P ∏Q / ∏x = ± ∏_J p_J^{e·s_J}` in the web chart, returning the exponent sign `e`
/// for which it holds, if any.
pub fn claim_identity_sign(s: &KinematicPoint) -> Option<i32> {
    let (k, n) = (s.k(), s.n());
    let chart = WebChart::new(k, n);
    let d = chart.dim();
    let (p, q) = claim_polynomials(k, n);
    let mut lhs = Laurent::one(d);
    for poly in p.iter().chain(q.iter()) {
        lhs = lhs.mul(&claim_to_web(k, n, poly));
    }
    // the denominator ∏ x_{i,j} becomes the product of all web variables
    let mut denom = Laurent::one(d);
    for v in 0..d {
        denom = denom.mul(&Laurent::var(d, v));
    }
    let matrix = chart.matrix();
    let mut numer_pos = Laurent::one(d);
    let mut numer_neg = Laurent::one(d);
    for (j, v) in s.iter() {
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return None;
        }
        let e: i64 = v.to_integer().try_into().ok()?;
        let pj = chart.minor(&matrix, j);
        if e > 0 {
            numer_pos = numer_pos.mul(&pj.pow(e as u32));
        } else {
            numer_neg = numer_neg.mul(&pj.pow((-e) as u32));
        }
    }
    // e = +1: lhs · neg = ± denom · pos ; e = -1: lhs · pos = ± denom · neg
    for (sign, a, b) in [(1, &numer_neg, &numer_pos), (-1, &numer_pos, &numer_neg)] {
        let left = lhs.mul(a);
        let right = denom.mul(b);
        if left == right || left == right.neg() {
            return Some(sign);
        }
    }
    None
}

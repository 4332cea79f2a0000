//! Exact linear programming over the rationals.
//!
//! Dense two-phase tableau simplex with Bland's rule, so it cannot cycle. Problems here are
//! small (tens of variables and constraints), so exactness matters far more than speed.

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    obj: Vec<Rational>,
    obj_value: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.obj_value -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs to optimality over the first `active` columns. Returns false when unbounded.
    fn optimize(&mut self, active: usize) -> bool {
        loop {
            let Some(c) = (0..active).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    /// Installs the objective `max c·y` in reduced form for the current basis.
    fn set_objective(&mut self, c: &[Rational]) {
        self.obj = c.iter().map(|v| -v).collect();
        self.obj_value = Rational::zero();
        for r in 0..self.rows.len() {
            let b = self.basis[r];
            if b < c.len() && !c[b].is_zero() {
                let f = c[b].clone();
                for (v, rv) in self.obj.iter_mut().zip(&self.rows[r]) {
                    *v += &f * rv;
                }
                self.obj_value += &f * &self.rhs[r];
            }
        }
    }
}

/// Maximize `c·x` subject to `a x ≤ b`, with every `x` free.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let d = c.len();
    let m = a.len();
    // columns: x+ (d), x- (d), slacks (m), artificial (1)
    let art = 2 * d + m;
    let width = art + 1;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![Rational::zero(); width];
        for j in 0..d {
            r[j] = row[j].clone();
            r[d + j] = -&row[j];
        }
        r[2 * d + i] = Rational::one();
        r[art] = -Rational::one();
        rows.push(r);
    }
    let mut t = Tableau {
        rows,
        rhs: b.to_vec(),
        obj: vec![Rational::zero(); width],
        obj_value: Rational::zero(),
        basis: (0..m).map(|i| 2 * d + i).collect(),
    };

    let most_negative = (0..m).filter(|&i| t.rhs[i].is_negative()).min_by(|&i, &j| t.rhs[i].cmp(&t.rhs[j]));
    if let Some(r) = most_negative {
        let mut aux = vec![Rational::zero(); width];
        aux[art] = -Rational::one();
        t.set_objective(&aux);
        t.pivot(r, art);
        t.optimize(width);
        if !t.obj_value.is_zero() {
            return LpOutcome::Infeasible;
        }
        if let Some(r) = t.basis.iter().position(|&v| v == art) {
            match (0..art).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                }
            }
        }
    }
    for row in t.rows.iter_mut() {
        row[art] = Rational::zero();
    }

    let mut full = vec![Rational::zero(); width];
    for j in 0..d {
        full[j] = c[j].clone();
        full[d + j] = -&c[j];
    }
    t.set_objective(&full);
    if !t.optimize(art) {
        return LpOutcome::Unbounded;
    }
    let mut y = vec![Rational::zero(); width];
    for (r, &bv) in t.basis.iter().enumerate() {
        y[bv] = t.rhs[r].clone();
    }
    let point = (0..d).map(|j| &y[j] - &y[d + j]).collect();
    LpOutcome::Optimal { value: t.obj_value.clone(), point }
}

/// Minimize `c·x` subject to `a x ≤ b`.
pub fn minimize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let neg: Vec<Rational> = c.iter().map(|v| -v).collect();
    match maximize(&neg, a, b) {
        LpOutcome::Optimal { value, point } => LpOutcome::Optimal { value: -value, point },
        other => other,
    }
}

/// A point with `a x < b` componentwise, if the open polyhedron is nonempty.
///
/// Solves `max t` over `a x + t ≤ b, t ≤ 1`; the interior is nonempty exactly when the optimum is positive.
pub fn strict_interior_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let d = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .map(|r| {
            let mut v = r.clone();
            v.push(Rational::one());
            v
        })
        .collect();
    let mut rhs = b.to_vec();
    let mut cap = vec![Rational::zero(); d + 1];
    cap[d] = Rational::one();
    rows.push(cap.clone());
    rhs.push(Rational::one());
    match maximize(&cap, &rows, &rhs) {
        LpOutcome::Optimal { value, mut point } if value.is_positive() => {
            point.truncate(d);
            Some(point)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → 36 at (2, 6)
        let out = maximize(&[int(3), int(5)], &rows(&[&[1, 0], &[0, 2], &[3, 2]]), &[int(4), int(12), int(18)]);
        assert_eq!(out, LpOutcome::Optimal { value: int(36), point: vec![int(2), int(6)] });
    }

    #[test]
    fn infeasible_and_unbounded() {
        // x ≤ -1 and -x ≤ -1
        let out = maximize(&[int(1)], &rows(&[&[1], &[-1]]), &[int(-1), int(-1)]);
        assert_eq!(out, LpOutcome::Infeasible);
        let out = maximize(&[int(1), int(1)], &rows(&[&[-1, 0]]), &[int(0)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn free_variables_and_negative_rhs() {
        // min x subject to x ≥ -7/2 written as -x ≤ 7/2, and x ≤ -1
        let out = minimize(&[int(1)], &rows(&[&[-1], &[1]]), &[rat(7, 2), int(-1)]);
        assert_eq!(out.value(), Some(&rat(-7, 2)));
    }

    #[test]
    fn interior_of_cone_vs_line() {
        // x > 0, y > 0 written as -x < 0, -y < 0
        assert!(strict_interior_point(&rows(&[&[-1, 0], &[0, -1]]), &[int(0), int(0)]).is_some());
        // x ≥ 0 and x ≤ 0 has no interior
        assert!(strict_interior_point(&rows(&[&[-1, 0], &[1, 0]]), &[int(0), int(0)]).is_none());
    }
}

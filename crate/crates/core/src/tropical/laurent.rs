//! Sparse multivariate Laurent polynomials with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ c_e x^e` with `e ∈ Z^vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    vars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl Laurent {
    pub fn zero(vars: usize) -> Self {
        Laurent { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        let mut p = Laurent::zero(vars);
        p.add_term(vec![0; vars], BigInt::from(c));
        p
    }

    pub fn one(vars: usize) -> Self {
        Laurent::constant(vars, 1)
    }

    /// The single variable `x_i`.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Laurent::monomial(e, BigInt::one())
    }

    pub fn monomial(exponent: Vec<i32>, c: BigInt) -> Self {
        let mut p = Laurent::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Laurent { vars: self.vars, terms: acc }
    }

    pub fn pow(&self, k: u32) -> Laurent {
        let mut out = Laurent::one(self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `+1` or `-1` when all coefficients share that sign; `None` for mixed signs or zero.
    pub fn uniform_sign(&self) -> Option<i32> {
        let pos = self.terms.values().all(|c| c.is_positive());
        let neg = self.terms.values().all(|c| c.is_negative());
        match (self.terms.is_empty(), pos, neg) {
            (true, _, _) => None,
            (_, true, _) => Some(1),
            (_, _, true) => Some(-1),
            _ => None,
        }
    }

    /// Set variable `i` to one.
    pub fn specialize_one(&self, i: usize) -> Laurent {
        let mut out = Laurent::zero(self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitute variables by index map `old → new` into a ring with `vars` variables.
    pub fn relabel(&self, vars: usize, map: impl Fn(usize) -> Option<usize>) -> Laurent {
        let mut out = Laurent::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars];
            for (i, &x) in e.iter().enumerate() {
                if let Some(j) = map(i) {
                    ne[j] += x;
                }
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Determinant of a square matrix of polynomials by cofactor expansion along the first row.
    pub fn det(m: &[Vec<Laurent>], vars: usize) -> Laurent {
        let n = m.len();
        if n == 0 {
            return Laurent::one(vars);
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Laurent::zero(vars);
        for c in 0..n {
            if m[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Laurent>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = m[0][c].mul(&Laurent::det(&minor, vars));
            acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, x) })
                .collect();
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", mag, mono.join("*")),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

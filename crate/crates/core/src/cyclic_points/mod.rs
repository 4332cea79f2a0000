//! Cyclic fixed points of the column shift: Lyndon classes, defectivity and root-of-unity matrices.

use num_integer::Integer;
use rayon::prelude::*;
use std::fmt;

use crate::algebra::{Complex, Cyclotomic, CyclotomicField, Field, Matrix};
use crate::amplitude::PointConfiguration;
use crate::error::{Error, Result};

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// Number of binary Lyndon words with k ones and n - k zeros.
pub fn count_lyndon(k: u64, n: u64) -> u128 {
    if n == 0 {
        return 0;
    }
    if k == 0 || k == n {
        return u128::from(n == 1);
    }
    let g = k.gcd(&n);
    let mut acc: i128 = 0;
    for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
        acc += mobius(d) as i128 * binomial(n / d, k / d) as i128;
    }
    (acc / n as i128) as u128
}

/// A cyclic fixed point, labelled by the exponents (m_1, ..., m_k) with m_k = n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPointLabel {
    n: u64,
    exponents: Vec<u64>,
}

impl FixedPointLabel {
    /// Exponents are read modulo n; n is added if no exponent is ≡ 0.
    pub fn new(n: u64, exponents: &[u64]) -> Result<Self> {
        let mut e: Vec<u64> = exponents.iter().map(|&m| if m % n == 0 { n } else { m % n }).collect();
        if !e.contains(&n) {
            e.push(n);
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("exponents {exponents:?} repeat modulo {n}")));
        }
        Ok(FixedPointLabel { n, exponents: e })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    /// (m_1, ..., m_k), m_k = n.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// (m_1, ..., m_{k-1}).
    pub fn reduced(&self) -> &[u64] {
        &self.exponents[..self.exponents.len() - 1]
    }

    /// The k relabelings that move one exponent to n.
    fn translates(&self) -> impl Iterator<Item = FixedPointLabel> + '_ {
        self.exponents.iter().map(move |&b| {
            let shifted: Vec<u64> = self.exponents.iter().map(|&m| (m + self.n - b) % self.n).collect();
            FixedPointLabel::new(self.n, &shifted).unwrap()
        })
    }

    /// Lexicographically smallest label in the class.
    pub fn canonical(&self) -> FixedPointLabel {
        self.translates().min().unwrap()
    }

    /// The underlying k-subset of Z/n has trivial stabilizer under translation.
    pub fn is_aperiodic(&self) -> bool {
        (1..self.n).all(|t| {
            if !self.n.is_multiple_of(t) {
                return true;
            }
            let shifted =
                FixedPointLabel::new(self.n, &self.exponents.iter().map(|&m| m + t).collect::<Vec<_>>()).unwrap();
            shifted != *self
        })
    }

    /// m ↦ n - m, canonicalized.
    pub fn conjugate(&self) -> FixedPointLabel {
        let e: Vec<u64> = self.exponents.iter().map(|&m| self.n - m % self.n).collect();
        FixedPointLabel::new(self.n, &e).unwrap().canonical()
    }

    /// Σ_a q^{m_a} = 0 in Q(ζ_n).
    pub fn is_defective(&self) -> bool {
        let f = CyclotomicField::new(self.n);
        self.exponents.iter().fold(f.zero(), |acc, &m| acc.plus(&f.q_pow(m as i64))).vanishes()
    }
}

impl fmt::Display for FixedPointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn canonical_class(label: &FixedPointLabel) -> FixedPointLabel {
    label.canonical()
}

pub fn is_defective(label: &FixedPointLabel) -> bool {
    label.is_defective()
}

/// Lyndon words of length k over gap sizes 1.., with total n (Duval/FKM generation with pruning).
fn lyndon_gap_words(k: usize, n: u64, out: &mut Vec<Vec<u64>>) {
    fn rec(t: usize, p: usize, sum: u64, a: &mut Vec<u64>, k: usize, n: u64, out: &mut Vec<Vec<u64>>) {
        if t > k {
            if p == k && sum == n {
                out.push(a[1..].to_vec());
            }
            return;
        }
        let remaining = (k - t) as u64;
        let lo = a[t - p];
        for c in lo..=n {
            if sum + c + remaining > n {
                break;
            }
            a[t] = c;
            let np = if c == lo { p } else { t };
            rec(t + 1, np, sum + c, a, k, n, out);
        }
    }
    if k == 0 {
        return;
    }
    let mut a = vec![0u64; k + 1];
    for first in 1..=n {
        if first + (k as u64 - 1) > n {
            break;
        }
        a[1] = first;
        rec(2, 1, first, &mut a, k, n, out);
    }
}

/// One canonical label per translation orbit of aperiodic k-subsets of Z/n, sorted.
pub fn enumerate_aperiodic_classes(k: usize, n: u64) -> Vec<FixedPointLabel> {
    let mut words = Vec::new();
    lyndon_gap_words(k, n, &mut words);
    let mut labels: Vec<FixedPointLabel> = words
        .into_iter()
        .map(|g| {
            let mut pos = Vec::with_capacity(k);
            let mut acc = 0;
            for x in g {
                acc += x;
                pos.push(acc);
            }
            FixedPointLabel::new(n, &pos).unwrap().canonical()
        })
        .collect();
    labels.sort();
    labels.dedup();
    labels
}

/// All translation classes of k-subsets of Z/n (periodic ones included), by brute force.
pub fn enumerate_all_classes(k: usize, n: u64) -> Vec<FixedPointLabel> {
    let mut out = Vec::new();
    let subsets = crate::kinematics::KSubset::all(k - 1, n as usize - 1);
    for s in subsets {
        let e: Vec<u64> = s.elements().iter().map(|&x| x as u64).collect();
        let l = FixedPointLabel::new(n, &e).unwrap();
        if l.canonical() == l {
            out.push(l);
        }
    }
    out
}

/// A solution of the PK scattering equations given by a cyclic fixed point.
#[derive(Clone, Debug)]
pub struct SolutionConfiguration {
    pub label: FixedPointLabel,
    /// Rows (1, ω_a, ..., ω_a^{n-1}); the row with ω = q^n = 1 comes first.
    pub matrix: PointConfiguration<Cyclotomic>,
}

impl SolutionConfiguration {
    pub fn from_label(label: &FixedPointLabel) -> Self {
        let n = label.n();
        let f = CyclotomicField::new(n);
        let mut order: Vec<u64> = vec![n];
        order.extend(label.reduced());
        let m = Matrix::from_fn(order.len(), n as usize, |r, c| f.q_pow((order[r] * c as u64) as i64));
        SolutionConfiguration { label: label.clone(), matrix: PointConfiguration::new(m) }
    }

    /// Same matrix in the complex float backend.
    pub fn float_matrix(&self) -> PointConfiguration<Complex> {
        let n = self.label.n() as f64;
        let mut order: Vec<u64> = vec![self.label.n()];
        order.extend(self.label.reduced());
        let m = Matrix::from_fn(order.len(), self.label.n() as usize, |r, c| {
            let theta = 2.0 * std::f64::consts::PI * ((order[r] * c as u64) % self.label.n()) as f64 / n;
            Complex::new(theta.cos(), theta.sin())
        });
        PointConfiguration::new(m)
    }
}

/// Non-defective aperiodic classes, ordered by label.
pub fn solution_labels(k: usize, n: u64) -> Vec<FixedPointLabel> {
    enumerate_aperiodic_classes(k, n).into_par_iter().filter(|l| !l.is_defective()).collect()
}

/// Defective aperiodic classes, ordered by label.
pub fn defective_labels(k: usize, n: u64) -> Vec<FixedPointLabel> {
    enumerate_aperiodic_classes(k, n).into_par_iter().filter(|l| l.is_defective()).collect()
}

pub fn solutions(k: usize, n: u64) -> Vec<SolutionConfiguration> {
    solution_labels(k, n).iter().map(SolutionConfiguration::from_label).collect()
}

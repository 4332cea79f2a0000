use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::KSubset;
use crate::algebra::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Sparse point of the kinematic space K(k,n); absent subsets carry s_J = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KinematicPoint {
    k: usize,
    n: usize,
    values: BTreeMap<KSubset, Rational>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    k: usize,
    n: usize,
    s: BTreeMap<String, String>,
}

impl KinematicPoint {
    pub fn zero(k: usize, n: usize) -> Self {
        KinematicPoint { k, n, values: BTreeMap::new() }
    }

    pub fn from_values(k: usize, n: usize, values: impl IntoIterator<Item = (KSubset, Rational)>) -> Result<Self> {
        let mut p = KinematicPoint::zero(k, n);
        for (j, v) in values {
            if j.k() != k || j.n() != n {
                return Err(Error::InvalidInput(format!("{j} is not a {k}-subset of [{n}]")));
            }
            p.set(j, v);
        }
        Ok(p)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: &KSubset) -> Rational {
        self.values.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, j: KSubset, v: Rational) {
        if v.is_zero() {
            self.values.remove(&j);
        } else {
            self.values.insert(j, v);
        }
    }

    /// Nonzero entries in subset order.
    pub fn iter(&self) -> impl Iterator<Item = (&KSubset, &Rational)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// Σ_{J ∋ a} s_J for a = 1..n.
    pub fn conservation_residuals(&self) -> Vec<Rational> {
        let mut r = vec![Rational::zero(); self.n];
        for (j, v) in &self.values {
            for &a in j.elements() {
                r[a - 1] += v;
            }
        }
        r
    }

    pub fn is_conserving(&self) -> bool {
        self.conservation_residuals().iter().all(Zero::is_zero)
    }

    /// s'_{flip J} = s_J.
    pub fn flip(&self) -> KinematicPoint {
        KinematicPoint {
            k: self.k,
            n: self.n,
            values: self.values.iter().map(|(j, v)| (j.flip(), v.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> KinematicPoint {
        let mut p = KinematicPoint::zero(self.k, self.n);
        for (j, v) in &self.values {
            p.set(j.clone(), v * c);
        }
        p
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_struct()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_struct()).expect("serializable")
    }

    fn to_json_struct(&self) -> PointJson {
        PointJson { k: self.k, n: self.n, s: self.values.iter().map(|(j, v)| (j.key(), format_rational(v))).collect() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PointJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = KinematicPoint::zero(raw.k, raw.n);
        for (key, val) in raw.s {
            let j = KSubset::parse_key(raw.n, &key)?;
            if j.k() != raw.k {
                return Err(Error::Parse(format!("subset {key} has size {} but k = {}", j.k(), raw.k)));
            }
            p.set(j, parse_rational(&val)?);
        }
        Ok(p)
    }
}

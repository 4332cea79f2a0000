use std::fmt;

use crate::error::{Error, Result};

/// A k-element subset of [n], 1-based and sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: usize,
    elems: Vec<usize>,
}

impl KSubset {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("repeated element in {elems:?}")));
        }
        if elems.iter().any(|&e| e == 0 || e > n) {
            return Err(Error::InvalidInput(format!("{elems:?} is not a subset of [1,{n}]")));
        }
        Ok(KSubset { n, elems })
    }

    /// Elements taken modulo n into [1, n].
    pub fn from_cyclic(n: usize, elems: impl IntoIterator<Item = i64>) -> Result<Self> {
        let v = elems.into_iter().map(|e| ((e - 1).rem_euclid(n as i64) + 1) as usize).collect();
        KSubset::new(n, v)
    }

    /// Cyclic window {i, i+1, ..., i+k-1}.
    pub fn window(n: usize, k: usize, i: usize) -> KSubset {
        KSubset::from_cyclic(n, (0..k as i64).map(|t| i as i64 + t)).expect("window")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elems.binary_search(&a).is_ok()
    }

    /// 0/1 indicator vector of length n.
    pub fn indicator(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        for &e in &self.elems {
            v[e - 1] = 1;
        }
        v
    }

    /// Maximal runs of cyclically consecutive elements.
    pub fn cyclic_intervals(&self) -> Vec<Vec<usize>> {
        if self.elems.len() == self.n {
            return vec![self.elems.clone()];
        }
        // start each run at an element whose predecessor is absent
        let pred = |a: usize| if a == 1 { self.n } else { a - 1 };
        let succ = |a: usize| if a == self.n { 1 } else { a + 1 };
        let mut runs = Vec::new();
        for &a in &self.elems {
            if self.contains(pred(a)) {
                continue;
            }
            let mut run = vec![a];
            let mut b = succ(a);
            while self.contains(b) {
                run.push(b);
                b = succ(b);
            }
            runs.push(run);
        }
        runs
    }

    /// A cyclic window {i, ..., i+k-1}.
    pub fn is_frozen(&self) -> bool {
        self.cyclic_intervals().len() == 1
    }

    /// {n+1-j : j ∈ J}.
    pub fn flip(&self) -> KSubset {
        KSubset::new(self.n, self.elems.iter().map(|&j| self.n + 1 - j).collect()).unwrap()
    }

    /// {j + t mod n}.
    pub fn shift(&self, t: i64) -> KSubset {
        KSubset::from_cyclic(self.n, self.elems.iter().map(|&j| j as i64 + t)).unwrap()
    }

    /// Comma-separated key used in JSON, e.g. "1,2,4".
    pub fn key(&self) -> String {
        self.elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_key(n: usize, key: &str) -> Result<Self> {
        let elems = key
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("subset key {key:?}"))))
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(n, elems)
    }

    /// All k-subsets of [n] in lexicographic order.
    pub fn all(k: usize, n: usize) -> Vec<KSubset> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=k).collect();
        if k > n {
            return out;
        }
        loop {
            out.push(KSubset { n, elems: cur.clone() });
            let mut i = k;
            while i > 0 && cur[i - 1] == n - k + i {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            cur[i - 1] += 1;
            for j in i..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
        out
    }

    pub fn nonfrozen(k: usize, n: usize) -> Vec<KSubset> {
        KSubset::all(k, n).into_iter().filter(|j| !j.is_frozen()).collect()
    }

    /// The interval [j_i - (i-1), j_{i+1} - i - 1] of row i (1-based, i < k) in the
    /// (k-1)×(n-k) array picked out by J; `None` when empty.
    pub fn row_interval(&self, i: usize) -> Option<(usize, usize)> {
        assert!(i >= 1 && i < self.k());
        let a = self.elems[i - 1] + 1 - i;
        let b = self.elems[i] as i64 - i as i64 - 1;
        (b >= a as i64).then_some((a, b as usize))
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, v: &[usize]) -> KSubset {
        KSubset::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn frozen_and_intervals() {
        assert!(s(6, &[5, 6, 1]).is_frozen());
        assert!(!s(6, &[1, 3, 5]).is_frozen());
        assert_eq!(s(6, &[1, 3, 6]).cyclic_intervals().len(), 2);
        assert_eq!(s(6, &[1, 3, 5]).cyclic_intervals().len(), 3);
        assert_eq!(KSubset::nonfrozen(3, 6).len(), 14);
        assert_eq!(KSubset::all(4, 9).len(), 126);
    }

    #[test]
    fn row_intervals() {
        let j = s(6, &[1, 4, 5]);
        assert_eq!(j.row_interval(1), Some((1, 2)));
        assert_eq!(j.row_interval(2), None);
        let j = s(6, &[1, 3, 6]);
        assert_eq!(j.row_interval(1), Some((1, 1)));
        assert_eq!(j.row_interval(2), Some((2, 3)));
    }

    #[test]
    fn flip_and_key() {
        assert_eq!(s(6, &[1, 2, 4]).flip(), s(6, &[3, 5, 6]));
        assert_eq!(KSubset::parse_key(6, "4,1,2").unwrap().key(), "1,2,4");
        assert!(KSubset::new(4, vec![1, 1]).is_err());
    }
}

use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::heights::height_scaled;
use super::{KSubset, KinematicPoint};
use crate::algebra::{Factorization, Matrix, Rational};
use crate::error::{Error, Result};

/// The square system (η_J for nonfrozen J, conservation for each a) → s, factored once.
#[derive(Debug)]
pub struct EtaSystem {
    pub k: usize,
    pub n: usize,
    subsets: Vec<KSubset>,
    nonfrozen: Vec<KSubset>,
    factor: Factorization<Rational>,
}

/// Coefficient matrix: rows η_J (nonfrozen J, lexicographic) then conservation rows.
pub fn eta_matrix(k: usize, n: usize) -> Matrix<Rational> {
    let subsets = KSubset::all(k, n);
    let nonfrozen = KSubset::nonfrozen(k, n);
    let nn = Rational::from_integer((n as i64).into());
    let rows: Vec<Vec<Rational>> =
        nonfrozen
            .iter()
            .map(|j| subsets.iter().map(|i| -Rational::from_integer(height_scaled(j, i).into()) / &nn).collect())
            .chain((1..=n).map(|a| {
                subsets.iter().map(|i| if i.contains(a) { Rational::one() } else { Rational::zero() }).collect()
            }))
            .collect();
    Matrix::from_rows(rows)
}

type Cache = HashMap<(usize, usize), Arc<EtaSystem>>;

impl EtaSystem {
    /// Shared, write-once factorization for (k, n).
    pub fn get(k: usize, n: usize) -> Result<Arc<EtaSystem>> {
        static CACHE: OnceLock<Mutex<Cache>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(sys) = cache.lock().unwrap().get(&(k, n)) {
            return Ok(sys.clone());
        }
        let sys = Arc::new(EtaSystem::build(k, n)?);
        Ok(cache.lock().unwrap().entry((k, n)).or_insert(sys).clone())
    }

    fn build(k: usize, n: usize) -> Result<EtaSystem> {
        if k < 2 || k + 2 > n {
            return Err(Error::InvalidInput(format!("need 2 <= k <= n-2, got (k,n) = ({k},{n})")));
        }
        let factor = Factorization::new(&eta_matrix(k, n))?;
        Ok(EtaSystem { k, n, subsets: KSubset::all(k, n), nonfrozen: KSubset::nonfrozen(k, n), factor })
    }

    pub fn nonfrozen(&self) -> &[KSubset] {
        &self.nonfrozen
    }

    pub fn solve(&self, targets: &BTreeMap<KSubset, Rational>) -> Result<KinematicPoint> {
        if let Some(extra) = targets.keys().find(|j| j.is_frozen() || j.k() != self.k || j.n() != self.n) {
            return Err(Error::InvalidInput(format!("no η target allowed for {extra}")));
        }
        let mut rhs = Vec::with_capacity(self.subsets.len());
        for j in &self.nonfrozen {
            let t = targets.get(j).ok_or_else(|| Error::InvalidInput(format!("missing η target for {j}")))?;
            rhs.push(t.clone());
        }
        rhs.extend(std::iter::repeat_n(Rational::zero(), self.n));
        let sol = self.factor.solve(&rhs);
        KinematicPoint::from_values(self.k, self.n, self.subsets.iter().cloned().zip(sol))
    }
}

/// Unique conserving s with η_J(s) = target_J for every nonfrozen J.
pub fn solve_eta_system(k: usize, n: usize, targets: &BTreeMap<KSubset, Rational>) -> Result<KinematicPoint> {
    EtaSystem::get(k, n)?.solve(targets)
}

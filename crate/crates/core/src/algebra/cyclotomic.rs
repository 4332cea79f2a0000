use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::{cyclotomic_polynomial, IntPoly};
use super::{Complex, Field, Rational};

/// The field Q(ζ_n), elements stored modulo Φ_n.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u64,
    phi: IntPoly,
    deg: usize,
    /// q^m reduced modulo Φ_n for 0 <= m < n.
    powers: Vec<Vec<BigInt>>,
    units: Vec<u64>,
}

impl CyclotomicField {
    /// Shared handle to Q(ζ_n); fields are cached per order.
    pub fn new(n: u64) -> Arc<CyclotomicField> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard.entry(n).or_insert_with(|| Arc::new(CyclotomicField::build(n))).clone()
    }

    fn build(n: u64) -> CyclotomicField {
        assert!(n >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(n);
        let deg = phi.degree();
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi.0) {
                    *c -= &top * *p;
                }
            }
        }
        let units = if n <= 2 { vec![1] } else { (1..n).filter(|&j| j.gcd(&n) == 1).collect() };
        CyclotomicField { n, phi, deg, powers, units }
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    /// Exponents j with gcd(j, n) = 1, i.e. the Galois group.
    pub fn units(&self) -> &[u64] {
        &self.units
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.phi
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic { field: self.clone(), num: vec![BigInt::zero(); self.deg], den: BigInt::one() }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.from_rational(&Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: &Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z
    }

    /// q^m for any integer m (taken modulo n).
    pub fn q_pow(self: &Arc<Self>, m: i64) -> Cyclotomic {
        let e = m.rem_euclid(self.n as i64) as usize;
        Cyclotomic { field: self.clone(), num: self.powers[e].clone(), den: BigInt::one() }
    }

    /// Element Σ c_i q^i from arbitrary-length rational coefficients.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[Rational]) -> Cyclotomic {
        let mut acc = self.zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.plus(&self.q_pow(i as i64).scale(c));
            }
        }
        acc
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let deg = self.deg;
        for top in (deg..v.len()).rev() {
            if v[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[top]);
            for i in 0..deg {
                let p = self.phi.0[i];
                if p != 0 {
                    v[top - deg + i] -= &c * p;
                }
            }
        }
        v.truncate(deg);
        v.resize(deg, BigInt::zero());
        v
    }
}

/// Exact element of Q(ζ_n): numerator polynomial in q over a common positive denominator.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.n
    }

    fn normalized(mut self) -> Self {
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
        }
        self
    }

    /// Coefficients of the canonical representative, lowest degree first.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    /// The element as a rational, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        }
        .normalized()
    }

    /// Image under the automorphism q ↦ q^j, gcd(j, n) = 1.
    pub fn galois(&self, j: u64) -> Cyclotomic {
        let n = self.field.n;
        assert!(n <= 2 || j.gcd(&n) == 1, "q -> q^{j} is not an automorphism of Q(zeta_{n})");
        let mut acc = vec![BigInt::zero(); self.field.deg];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as u64 * j) % n) as usize;
            for (a, p) in acc.iter_mut().zip(&self.field.powers[e]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { field: self.field.clone(), num: acc, den: self.den.clone() }.normalized()
    }

    /// Complex conjugation, q ↦ q^{n-1}.
    pub fn conj(&self) -> Cyclotomic {
        let n = self.field.n;
        if n <= 2 {
            return self.clone();
        }
        self.galois(n - 1)
    }

    /// All Galois conjugates σ_j(z), j running over units mod n in increasing order.
    pub fn conjugates(&self) -> Vec<Cyclotomic> {
        self.field.units.iter().map(|&j| self.galois(j)).collect()
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        let mut acc = self.field.one();
        for &j in &self.field.units {
            acc = acc.times(&self.galois(j));
        }
        acc.to_rational().expect("norm lies in Q")
    }

    /// Complex embedding with q = exp(2πi/n).
    pub fn embed(&self) -> Complex {
        let n = self.field.n as f64;
        let den = super::rational_to_f64(&Rational::new(BigInt::one(), self.den.clone()));
        let mut acc = Complex::new(0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
            let cf = c.to_f64().unwrap_or(f64::NAN) * den;
            acc += Complex::new(cf * theta.cos(), cf * theta.sin());
        }
        acc
    }

    fn same_field(&self, other: &Cyclotomic) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.n == other.field.n,
            "mixing Q(zeta_{}) and Q(zeta_{})",
            self.field.n,
            other.field.n
        );
    }
}

impl Field for Cyclotomic {
    const EXACT: bool = true;
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn from_int_like(&self, v: i64) -> Self {
        self.field.from_rational(&Rational::from_integer(v.into()))
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        self.field.from_rational(r)
    }
    fn vanishes(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let num = if self.den == rhs.den {
            self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect()
        } else {
            self.num.iter().zip(&rhs.num).map(|(a, b)| a * &rhs.den + b * &self.den).collect()
        };
        let den = if self.den == rhs.den { self.den.clone() } else { &self.den * &rhs.den };
        Cyclotomic { field: self.field.clone(), num, den }.normalized()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let deg = self.field.deg;
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic { field: self.field.clone(), num: self.field.reduce(prod), den: &self.den * &rhs.den }.normalized()
    }
    fn negate(&self) -> Self {
        Cyclotomic { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
    fn recip(&self) -> Option<Self> {
        if self.vanishes() {
            return None;
        }
        // z^{-1} = (product of the other conjugates) / norm
        let mut others = self.field.one();
        for &j in self.field.units.iter().filter(|&&j| j != 1) {
            others = others.times(&self.galois(j));
        }
        let norm = self.times(&others).to_rational().expect("norm lies in Q");
        Some(others.scale(&norm.recip()))
    }
    fn magnitude(&self) -> f64 {
        self.embed().norm()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.den == other.den && self.num == other.num
    }
}
impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.plus(rhs)
    }
}
impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.minus(rhs)
    }
}
impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.times(rhs)
    }
}
impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.negate()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self, self.field.n)
    }
}

/// Polynomial in `q` with rational coefficients, highest degree first.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = super::format_rational(&a);
            match (e, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{coef}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{coef}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn vanishing_sums() {
        let k12 = CyclotomicField::new(12);
        let s = [0, 4, 8].iter().fold(k12.zero(), |a, &m| a.plus(&k12.q_pow(m)));
        assert!(s.vanishes());
        let s = [1, 4, 7, 8, 12].iter().fold(k12.zero(), |a, &m| a.plus(&k12.q_pow(m)));
        assert!(s.vanishes());
        let k8 = CyclotomicField::new(8);
        let s = [0, 1, 4, 5].iter().fold(k8.zero(), |a, &m| a.plus(&k8.q_pow(m)));
        assert!(s.vanishes());
        let s = [0, 1, 4].iter().fold(k8.zero(), |a, &m| a.plus(&k8.q_pow(m)));
        assert!(!s.vanishes());
    }

    #[test]
    fn inverse_and_conjugation() {
        for n in [1u64, 2, 3, 5, 8, 9, 12, 30] {
            let f = CyclotomicField::new(n);
            let z = f.from_coeffs(&[rat(1, 2), int(3), int(-2), rat(5, 7)]);
            if z.vanishes() {
                continue;
            }
            let w = z.recip().unwrap();
            assert_eq!(z.times(&w), f.one(), "n = {n}");
            let zz = z.times(&z.conj());
            assert!(zz.embed().im.abs() < 1e-9);
            assert!((zz.embed().re - z.embed().norm_sqr()).abs() < 1e-9);
        }
    }

    #[test]
    fn display_matches_polynomial() {
        let f = CyclotomicField::new(5);
        let z = f.q_pow(2).minus(&f.q_pow(1));
        assert_eq!(z.to_string(), "q^2 - q");
        assert_eq!(f.q_pow(5), f.one());
    }
}

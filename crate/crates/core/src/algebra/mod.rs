//! Exact rationals, cyclotomic fields, exact matrices and a complex float mirror.

mod complex;
mod cyclotomic;
mod matrix;
mod poly;
mod reconstruct;

pub use complex::Complex;
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use matrix::{Factorization, Matrix};
pub use poly::{cyclotomic_polynomial, euler_phi, IntPoly};
pub use reconstruct::reconstruct_rational;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Build `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Serialize as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim().replace('\u{2212}', "-");
    let parsed = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s}")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(t.parse().map_err(|_| Error::Parse(s.to_string()))?),
    };
    Ok(parsed)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(p), Some(q)) if p.is_finite() && q.is_finite() => p / q,
        _ => {
            // scale down huge numerators and denominators together
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let p = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let q = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            p / q
        }
    }
}

/// Common interface of the coefficient fields used for minors, Hessians and determinants.
///
/// Exact fields compare with zero structurally; the float mirror uses a tolerance.
pub trait Field: Clone + Debug + Send + Sync {
    const EXACT: bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    // `self` is the witness fixing the field (cyclotomic order)
    #[allow(clippy::wrong_self_convention)]
    fn from_int_like(&self, v: i64) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_rational_like(&self, r: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn recip(&self) -> Option<Self>;
    /// Size used for pivot selection in inexact fields.
    fn magnitude(&self) -> f64;

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self.times(&r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    const EXACT: bool = true;
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_int_like(&self, v: i64) -> Self {
        int(v)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(Rational::recip(self))
        }
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-1", "7/3", "-14965237/9"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn rational_pow() {
        assert_eq!(rat(2, 3).pow(3), rat(8, 27));
    }
}

use std::fmt;

/// Dense integer polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<i64>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn trim(mut self) -> Self {
        while self.0.len() > 1 && *self.0.last().unwrap() == 0 {
            self.0.pop();
        }
        self
    }

    /// Exact division by a monic divisor; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree();
        assert_eq!(*d.0.last().unwrap(), 1, "divisor must be monic");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return IntPoly(vec![0]);
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (i, &di) in d.0.iter().enumerate() {
                rem[top - dd + i] = rem[top - dd + i]
                    .checked_sub(c.checked_mul(di).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
        IntPoly(quot).trim()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{e}")?,
                _ => write!(f, "{a}x^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&j| num_integer::gcd(j, n) == 1).count() as u64
}

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1);
    let divs = divisors(n);
    let mut known: Vec<(u64, IntPoly)> = Vec::with_capacity(divs.len());
    for &m in &divs {
        let mut p = vec![0i64; m as usize + 1];
        p[0] = -1;
        p[m as usize] = 1;
        let mut acc = IntPoly(p);
        for (d, phi_d) in &known {
            if m % d == 0 {
                acc = acc.div_exact(phi_d);
            }
        }
        known.push((m, acc));
    }
    known.pop().unwrap().1
}

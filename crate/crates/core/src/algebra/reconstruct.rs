use num_bigint::BigInt;

use super::Rational;

/// Best rational approximation of `x` with denominator at most `max_den`, accepted only if
/// it lies within `tol` (relative to max(1, |x|)).
pub fn reconstruct_rational(x: f64, max_den: u64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    // continued fraction convergents
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    let mut best: Option<(i128, i128)> = None;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e18 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        best = Some((p2, q2));
        let frac = r - a;
        if (x - p2 as f64 / q2 as f64).abs() <= tol * x.abs().max(1.0) * 1e-3 || frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    let (p, q) = best?;
    let err = (x - p as f64 / q as f64).abs();
    (err <= tol * x.abs().max(1.0)).then(|| Rational::new(BigInt::from(p), BigInt::from(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn recovers_small_fractions() {
        assert_eq!(reconstruct_rational(1662804.0 + 1e-9, 1_000_000, 1e-6), Some(rat(1662804, 1)));
        assert_eq!(reconstruct_rational(14965237.0 / 9.0, 1_000_000, 1e-6), Some(rat(14965237, 9)));
        assert_eq!(reconstruct_rational(-0.75, 1_000_000, 1e-6), Some(rat(-3, 4)));
        assert_eq!(reconstruct_rational(std::f64::consts::PI, 10, 1e-9), None);
    }
}

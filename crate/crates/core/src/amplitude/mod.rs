//! Amplitudes at PK by summing over cyclic-fixed-point solutions of the scattering equations.

mod configuration;
mod gauge;
mod potential;

pub use configuration::PointConfiguration;
pub use gauge::{
    find_frame, first_valid_gauge, frame_ratio, generalized_vandermonde, generic_rational_configuration,
    normalization_constant, null_space_matrix, null_space_minor, reduced_determinant_framed,
    reduced_determinant_general, sl_generators, GaugeChoice,
};
pub use potential::{composite_index, hessian, potential_gradient};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{reconstruct_rational, Complex, Cyclotomic, Field, Rational};
use crate::cyclic_points::{solution_labels, FixedPointLabel, SolutionConfiguration};
use crate::error::{Error, Result};
use crate::kinematics::{pk_point, KinematicPoint};

/// k-dimensional Catalan number: standard Young tableaux of a k×m rectangle.
pub fn catalan_number(k: u64, m: u64) -> BigInt {
    let fact = |x: u64| (1..=x).fold(BigInt::one(), |acc, i| acc * i);
    let mut num = fact(k * m);
    let mut den = BigInt::one();
    for i in 0..k {
        num *= fact(i);
        den *= fact(m + i);
    }
    num / den
}

/// 1 / ∏_i p_{i,i+1,...,i+k-1}, columns in cyclic order.
pub fn parke_taylor<F: Field>(c: &PointConfiguration<F>) -> Result<F> {
    let (k, n) = (c.k(), c.n());
    let mut prod = c.entry(0, 1).one_like();
    for i in 1..=n {
        let cols: Vec<usize> = (0..k).map(|t| (i - 1 + t) % n + 1).collect();
        let p = c.minor_ordered(&cols);
        if p.vanishes() {
            return Err(Error::PoleHit(format!("window minor at {i}")));
        }
        prod = prod.times(&p);
    }
    Ok(prod.recip().expect("nonzero product"))
}

/// How the reduced determinant of one solution was gauge fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaugeUsed {
    Frame(Vec<usize>),
    General(Vec<usize>),
}

/// (-1)^{(k-1)(n-k-1)} PT² / det′Ψ for one configuration, with a prescribed gauge.
///
/// The sign is the dimension of the moduli space; it amounts to taking det′ of the Hessian of -S.
pub fn summand_with_gauge<F: Field>(s: &KinematicPoint, c: &PointConfiguration<F>, gauge: &GaugeUsed) -> Result<F> {
    let psi = hessian(s, c)?;
    let det = match gauge {
        GaugeUsed::Frame(a) => reduced_determinant_framed(c, &psi, a)?,
        GaugeUsed::General(idx) => {
            reduced_determinant_general(c, &psi, &GaugeChoice::symmetric(idx.clone()), &normalization_constant(c.k()))?
        }
    };
    if gauge::exactly_zero(&det) {
        return Err(Error::PoleHit("reduced determinant".into()));
    }
    let pt = parke_taylor(c)?;
    let value = pt.times(&pt).divide(&det).expect("nonzero determinant");
    let dim = (c.k() - 1) * (c.n() - c.k() - 1);
    Ok(if dim % 2 == 1 { value.negate() } else { value })
}

/// Frame if one exists, otherwise the lexicographically first valid general gauge.
pub fn choose_gauge<F: Field>(c: &PointConfiguration<F>) -> Result<GaugeUsed> {
    match find_frame(c) {
        Some(a) => Ok(GaugeUsed::Frame(a)),
        None => Ok(GaugeUsed::General(first_valid_gauge(c)?.deleted_rows)),
    }
}

pub fn summand<F: Field>(s: &KinematicPoint, c: &PointConfiguration<F>) -> Result<(F, GaugeUsed)> {
    let g = choose_gauge(c)?;
    Ok((summand_with_gauge(s, c, &g)?, g))
}

/// Agreement required of float-mode amplitudes.
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    /// Exact whenever (k-1)n ≤ 30.
    pub fn default_for(k: usize, n: usize) -> Backend {
        if (k - 1) * n <= 30 {
            Backend::Exact
        } else {
            Backend::Float
        }
    }
}

#[derive(Clone, Debug)]
pub enum TermValue {
    Exact(Cyclotomic),
    Float(Complex),
}

impl TermValue {
    pub fn to_complex(&self) -> Complex {
        match self {
            TermValue::Exact(z) => z.embed(),
            TermValue::Float(z) => *z,
        }
    }

    pub fn render(&self) -> String {
        match self {
            TermValue::Exact(z) => match z.to_rational() {
                Some(r) => crate::algebra::format_rational(&r),
                None => z.to_string(),
            },
            TermValue::Float(z) => format!("{:.12e}{:+.12e}i", z.re, z.im),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolutionTerm {
    pub label: FixedPointLabel,
    pub gauge: GaugeUsed,
    pub value: TermValue,
}

impl SolutionTerm {
    pub fn framed(&self) -> bool {
        matches!(self.gauge, GaugeUsed::Frame(_))
    }
}

#[derive(Clone, Debug)]
pub struct AmplitudeReport {
    pub k: usize,
    pub n: usize,
    pub backend: Backend,
    pub amplitude: Rational,
    pub catalan: BigInt,
    pub terms: Vec<SolutionTerm>,
}

impl AmplitudeReport {
    /// Exact equality, or relative error at most [`FLOAT_RELATIVE_TOLERANCE`] in float mode.
    pub fn matches_catalan(&self) -> bool {
        let cat = Rational::from_integer(self.catalan.clone());
        match self.backend {
            Backend::Exact => self.amplitude == cat,
            Backend::Float => {
                let err = crate::algebra::rational_to_f64(&(&self.amplitude - &cat)).abs();
                err <= FLOAT_RELATIVE_TOLERANCE * crate::algebra::rational_to_f64(&cat).abs()
            }
        }
    }

    /// Exact sum of the terms selected by `keep`; `None` if it is not rational.
    pub fn partial_sum(&self, keep: impl Fn(&SolutionTerm) -> bool) -> Option<Rational> {
        let mut exact: Option<Cyclotomic> = None;
        for t in self.terms.iter().filter(|t| keep(t)) {
            match &t.value {
                TermValue::Exact(z) => exact = Some(exact.map_or(z.clone(), |acc| acc.plus(z))),
                TermValue::Float(_) => return None,
            }
        }
        match exact {
            Some(z) => z.to_rational(),
            None => Some(Rational::zero()),
        }
    }
}

fn sum_exact(terms: &[SolutionTerm]) -> Result<Rational> {
    let mut acc: Option<Cyclotomic> = None;
    for t in terms {
        if let TermValue::Exact(z) = &t.value {
            acc = Some(acc.map_or(z.clone(), |a| a.plus(z)));
        }
    }
    let total = acc.ok_or_else(|| Error::InvalidInput("no solutions".into()))?;
    total.to_rational().ok_or_else(|| Error::InvalidInput(format!("amplitude {total} is not rational")))
}

fn sum_float(terms: &[SolutionTerm]) -> Result<Rational> {
    // Kahan-compensated real part
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for t in terms {
        let y = t.value.to_complex().re - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    // beyond 2^53 every double is an integer and no fraction is resolvable
    if sum.abs() >= 9.007_199_254_740_992e15 {
        if let Some(v) = num_traits::FromPrimitive::from_f64(sum) {
            return Ok(Rational::from_integer(v));
        }
    }
    reconstruct_rational(sum, 1_000_000, 1e-6)
        .ok_or_else(|| Error::InvalidInput(format!("no rational with denominator <= 10^6 near {sum}")))
}

/// m_n^{(k)}(I,I) at PK summed over all solutions.
pub fn amplitude_pk(k: usize, n: usize, backend: Backend) -> Result<AmplitudeReport> {
    let s = pk_point(k, n)?;
    let labels = solution_labels(k, n as u64);
    let terms: Vec<SolutionTerm> = labels
        .par_iter()
        .map(|label| {
            let sol = SolutionConfiguration::from_label(label);
            // the gauge is always decided exactly
            let gauge = choose_gauge(&sol.matrix)?;
            let value = match backend {
                Backend::Exact => TermValue::Exact(summand_with_gauge(&s, &sol.matrix, &gauge)?),
                Backend::Float => TermValue::Float(summand_with_gauge(&s, &sol.float_matrix(), &gauge)?),
            };
            Ok(SolutionTerm { label: label.clone(), gauge, value })
        })
        .collect::<Result<_>>()?;
    let amplitude = match backend {
        Backend::Exact => sum_exact(&terms)?,
        Backend::Float => sum_float(&terms)?,
    };
    Ok(AmplitudeReport { k, n, backend, amplitude, catalan: catalan_number(k as u64, (n - k) as u64), terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_number(2, 4), BigInt::from(14));
        assert_eq!(catalan_number(3, 3), BigInt::from(42));
        assert_eq!(catalan_number(4, 4), BigInt::from(24024));
        assert_eq!(catalan_number(4, 5), BigInt::from(1662804));
        for k in 0..6 {
            for m in 0..6 {
                assert_eq!(catalan_number(k, m), catalan_number(m, k));
            }
        }
    }
}

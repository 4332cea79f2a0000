use super::{rational_to_f64, Field, Rational};

/// Double-precision complex numbers, the float mirror of the cyclotomic backend.
pub type Complex = num_complex::Complex64;

/// Values below this magnitude count as zero in the float backend.
pub const FLOAT_ZERO: f64 = 1e-11;

impl Field for Complex {
    const EXACT: bool = false;
    fn zero_like(&self) -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_int_like(&self, v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Complex::new(rational_to_f64(r), 0.0)
    }
    fn vanishes(&self) -> bool {
        self.norm() < FLOAT_ZERO
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
        if self.norm() == 0.0 {
            None
        } else {
            Some(self.inv())
        }
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

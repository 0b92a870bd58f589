use alloc::string::String;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use super::rational::rational_to_f64;
use super::{Cyclotomic, Rational, Scalar};

/// A complex number in double precision.
///
/// `PartialEq` is bitwise; tolerance-aware comparison goes through
/// [`Scalar::approx_eq`].
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexFloat(pub Complex64);

impl ComplexFloat {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexFloat(Complex64::new(re, im))
    }
}

impl From<&Rational> for ComplexFloat {
    fn from(q: &Rational) -> Self {
        ComplexFloat(q.to_complex())
    }
}

impl From<&Cyclotomic> for ComplexFloat {
    fn from(c: &Cyclotomic) -> Self {
        ComplexFloat(c.to_complex())
    }
}

impl fmt::Display for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else {
            write!(f, "{}{:+}i", self.0.re, self.0.im)
        }
    }
}

impl Scalar for ComplexFloat {
    const EXACT: bool = false;
    const BACKEND: &'static str = "float";

    fn zero() -> Self {
        ComplexFloat::new(0.0, 0.0)
    }

    fn one() -> Self {
        ComplexFloat::new(1.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        ComplexFloat::new(n as f64, 0.0)
    }

    fn from_rational(q: &BigRational) -> Self {
        ComplexFloat::new(rational_to_f64(q), 0.0)
    }

    fn root_of_unity(k: i64, n: u32) -> Option<Self> {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64);
        // Exact values at the quarter points keep ±1 and ±i free of rounding noise.
        if (4 * k) % n as i64 == 0 {
            let q = 4 * k / n as i64;
            return Some(match q {
                0 => ComplexFloat::new(1.0, 0.0),
                1 => ComplexFloat::new(0.0, 1.0),
                2 => ComplexFloat::new(-1.0, 0.0),
                _ => ComplexFloat::new(0.0, -1.0),
            });
        }
        Some(ComplexFloat(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)))
    }

    fn from_cyclotomic(n: u32, coeffs: &[BigRational]) -> Option<Self> {
        Some(ComplexFloat(Cyclotomic::new(n, coeffs.to_vec()).to_complex()))
    }

    #[inline]
    fn from_complex(z: Complex64) -> Option<Self> {
        Some(ComplexFloat(z))
    }

    fn add(&self, rhs: &Self) -> Self {
        ComplexFloat(self.0 + rhs.0)
    }

    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        ComplexFloat(self.0 - rhs.0)
    }

    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        ComplexFloat(self.0 * rhs.0)
    }

    #[inline]
    fn neg(&self) -> Self {
        ComplexFloat(-self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.re == 0.0 && self.0.im == 0.0 {
            None
        } else {
            Some(ComplexFloat(self.0.inv()))
        }
    }

    fn conj(&self) -> Self {
        ComplexFloat(self.0.conj())
    }

    fn galois(&self, _a: u32) -> Self {
        *self
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn to_complex(&self) -> Complex64 {
        self.0
    }

    fn field_order(&self) -> u32 {
        0
    }

    fn serialize(&self) -> String {
        alloc::format!("[{:e},{:e}]", self.0.re, self.0.im)
    }

    #[inline]
    fn add_assign(&mut self, rhs: &Self) {
        self.0 += rhs.0;
    }

    #[inline]
    fn mul_acc(&mut self, a: &Self, b: &Self) {
        self.0 += a.0 * b.0;
    }
}

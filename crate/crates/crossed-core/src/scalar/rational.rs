use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Scalar;

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge numerator or denominator: shift both down before dividing.
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900);
            let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const BACKEND: &'static str = "rational";

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        n.into()
    }

    fn from_rational(q: &BigRational) -> Self {
        Rational(q.clone())
    }

    fn root_of_unity(k: i64, n: u32) -> Option<Self> {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64);
        if k == 0 {
            Some(Self::one())
        } else if 2 * k == n as i64 {
            Some(Self::from_i64(-1))
        } else {
            None
        }
    }

    fn from_cyclotomic(n: u32, coeffs: &[BigRational]) -> Option<Self> {
        let mut acc = Self::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = Self::root_of_unity(j as i64, n)?;
            acc.add_assign(&Rational(c.clone()).mul(&z));
        }
        Some(acc)
    }

    fn from_complex(_z: Complex64) -> Option<Self> {
        None
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn galois(&self, _a: u32) -> Self {
        self.clone()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.0), 0.0)
    }

    fn field_order(&self) -> u32 {
        1
    }

    fn serialize(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            alloc::format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.0.abs())
    }
}

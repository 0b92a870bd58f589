//! Ground-field arithmetic.
//!
//! Three backends share the [`Scalar`] trait: exact rationals, exact elements of a
//! cyclotomic field ℚ(ζ_N), and complex floating point numbers. Exact backends compare
//! by value; the float backend compares through [`Scalar::approx_eq`] with an explicit
//! tolerance.

mod cyclotomic;
mod float;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use float::ComplexFloat;
pub use rational::Rational;

use alloc::string::String;
use core::fmt::{Debug, Display};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Float;

/// An element of the ground field.
pub trait Scalar: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    /// Whether equality is decidable without a tolerance.
    const EXACT: bool;
    /// Backend name used in reports.
    const BACKEND: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    /// ζ_n^k, or `None` when the backend cannot represent it.
    fn root_of_unity(k: i64, n: u32) -> Option<Self>;

    /// The element Σ c_j ζ_n^j, or `None` when the backend cannot represent it.
    fn from_cyclotomic(n: u32, coeffs: &[BigRational]) -> Option<Self>;

    /// re + i·im; only the float backend represents arbitrary complex numbers.
    fn from_complex(z: Complex64) -> Option<Self>;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;

    /// Field automorphism ζ ↦ ζ^a. Only meaningful for cyclotomic values; other
    /// backends return the value unchanged.
    fn galois(&self, a: u32) -> Self;

    /// Exact zero test (for floats: bitwise zero).
    fn is_zero(&self) -> bool;

    fn to_complex(&self) -> Complex64;

    /// Smallest N such that the value lies in ℚ(ζ_N); 0 for the float backend.
    fn field_order(&self) -> u32;

    /// Short machine-readable form used in reports.
    fn serialize(&self) -> String;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    /// Zero test under the tolerance policy: exact backends ignore `tol`.
    fn near_zero(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= tol
        }
    }

    fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.sub(rhs).near_zero(tol)
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    /// `self += a * b`
    fn mul_acc(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer value if the scalar is one (exactly, or within `tol`).
    fn as_integer(&self, tol: f64) -> Option<i64> {
        let z = self.to_complex();
        let r = Float::round(z.re);
        if Float::abs(r) > 1e15 {
            return None;
        }
        let candidate = Self::from_i64(r as i64);
        if self.approx_eq(&candidate, tol) {
            Some(r as i64)
        } else {
            None
        }
    }
}

/// Residual |a - b| as a float, 0 for exactly equal exact values.
pub fn residual<F: Scalar>(a: &F, b: &F) -> f64 {
    let d = a.sub(b);
    if d.is_zero() {
        0.0
    } else {
        d.magnitude()
    }
}

/// Greatest common divisor of two unsigned integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Least common multiple of two unsigned integers, with lcm(0, x) = x.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    num_integer::Integer::lcm(&a, &b)
}

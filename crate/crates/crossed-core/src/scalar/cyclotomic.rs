use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::rational_to_f64;
use super::{lcm, Scalar};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Coefficients (constant term first) of the n-th cyclotomic polynomial Φ_n.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}; multiply the numerator factors first, then
    // divide out the denominator factors exactly.
    let mut poly = vec![1i64];
    let mut divisors = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            match mobius(n / d) {
                1 => {
                    let mut next = vec![0i64; poly.len() + d as usize];
                    for (i, &c) in poly.iter().enumerate() {
                        next[i + d as usize] += c;
                        next[i] -= c;
                    }
                    poly = next;
                }
                -1 => divisors.push(d),
                _ => {}
            }
        }
    }
    for d in divisors {
        // Divide by x^d - 1: q_i = q_{i-d} - p_i read from the low end.
        let d = d as usize;
        let out_len = poly.len() - d;
        let mut q = vec![0i64; out_len];
        let mut rem = poly.clone();
        for i in (0..out_len).rev() {
            let c = rem[i + d];
            q[i] = c;
            rem[i + d] -= c;
            rem[i] += c;
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        poly = q;
    }
    poly
}

/// An exact element of ℚ(ζ_N), stored as its canonical representative modulo Φ_N
/// in the power basis 1, ζ_N, …, ζ_N^{φ(N)-1}.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

fn reduce(mut c: Vec<BigRational>, phi: &[i64]) -> Vec<BigRational> {
    let d = phi.len() - 1;
    if c.len() <= d {
        c.resize(d, BigRational::zero());
        return c;
    }
    for i in (d..c.len()).rev() {
        if c[i].is_zero() {
            continue;
        }
        let lead = core::mem::replace(&mut c[i], BigRational::zero());
        for (j, &pj) in phi.iter().enumerate().take(d) {
            if pj != 0 {
                let t = &lead * BigRational::from_integer(BigInt::from(pj));
                c[i - d + j] -= t;
            }
        }
    }
    c.truncate(d);
    c
}

impl Cyclotomic {
    /// Element Σ coeffs[j] ζ_n^j; `coeffs` may be longer than φ(n).
    pub fn new(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1, "cyclotomic order 0");
        let phi = cyclotomic_polynomial(order);
        Cyclotomic {
            order,
            coeffs: reduce(coeffs, &phi),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The same value written in ℚ(ζ_m), where `order` divides `m`.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        let step = (m / self.order) as usize;
        let mut c = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (j, q) in self.coeffs.iter().enumerate() {
            c[j * step] = q.clone();
        }
        Cyclotomic::new(m, c)
    }

    /// Rewrites the value in the smallest ℚ(ζ_d) containing it, among divisors d of the order.
    pub fn simplify(&self) -> Self {
        let n = self.order;
        for d in 1..n {
            if n % d != 0 {
                continue;
            }
            // Candidate: coefficients only on powers that are multiples of n/d.
            let lifted_back = self.try_descend(d);
            if let Some(c) = lifted_back {
                return c;
            }
        }
        self.clone()
    }

    fn try_descend(&self, d: u32) -> Option<Self> {
        // Solve for an element of ℚ(ζ_d) whose lift equals self by comparing power
        // bases: lift(basis of ℚ(ζ_d)) spans a subspace; project coordinates.
        let k = euler_phi(d) as usize;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(k);
        for j in 0..k {
            let mut e = vec![BigRational::zero(); k];
            e[j] = BigRational::one();
            cols.push(Cyclotomic::new(d, e).lift(self.order).coeffs);
        }
        let x = solve_rational_columns(&cols, &self.coeffs)?;
        Some(Cyclotomic::new(d, x))
    }

    fn unify(&self, rhs: &Self) -> (Self, Self) {
        if self.order == rhs.order {
            return (self.clone(), rhs.clone());
        }
        let m = lcm(self.order as u64, rhs.order as u64) as u32;
        (self.lift(m), rhs.lift(m))
    }

    fn mul_same_order(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Cyclotomic::new(self.order, prod)
    }

    fn rational_part(&self) -> Option<&BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            self.coeffs.first()
        } else {
            None
        }
    }
}

/// Solves Σ_j x_j cols[j] = rhs over ℚ, returning `None` if inconsistent.
fn solve_rational_columns(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let k = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=k {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][k].clone();
    }
    Some(x)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<&super::Rational> for Cyclotomic {
    fn from(q: &super::Rational) -> Self {
        Cyclotomic::rational(q.0.clone())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rational_part() {
            return write!(f, "{}", super::Rational(q.clone()));
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let q = super::Rational(c.clone());
            match j {
                0 => write!(f, "{q}")?,
                1 => write!(f, "({q})·z{}", self.order)?,
                _ => write!(f, "({q})·z{}^{j}", self.order)?,
            }
        }
        Ok(())
    }
}

impl Scalar for Cyclotomic {
    const EXACT: bool = true;
    const BACKEND: &'static str = "cyclotomic";

    fn zero() -> Self {
        Cyclotomic::rational(BigRational::zero())
    }

    fn one() -> Self {
        Cyclotomic::rational(BigRational::one())
    }

    fn from_i64(n: i64) -> Self {
        n.into()
    }

    fn from_rational(q: &BigRational) -> Self {
        Cyclotomic::rational(q.clone())
    }

    fn root_of_unity(k: i64, n: u32) -> Option<Self> {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Some(Cyclotomic::new(n, c))
    }

    fn from_cyclotomic(n: u32, coeffs: &[BigRational]) -> Option<Self> {
        Some(Cyclotomic::new(n, coeffs.to_vec()))
    }

    fn from_complex(_z: Complex64) -> Option<Self> {
        None
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.order != rhs.order {
            let (a, b) = self.unify(rhs);
            return a.add(&b);
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        if self.order != rhs.order {
            let (a, b) = self.unify(rhs);
            return a.sub(&b);
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if let Some(q) = rhs.rational_part() {
            return Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().map(|a| a * q).collect(),
            };
        }
        if let Some(q) = self.rational_part() {
            return Cyclotomic {
                order: rhs.order,
                coeffs: rhs.coeffs.iter().map(|a| a * q).collect(),
            };
        }
        if self.order != rhs.order {
            let (a, b) = self.unify(rhs);
            return a.mul_same_order(&b);
        }
        self.mul_same_order(rhs)
    }

    fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if let Some(q) = self.rational_part() {
            if q.is_zero() {
                return None;
            }
            return Some(Cyclotomic::rational(q.recip()));
        }
        // Columns of the multiplication-by-self map in the power basis.
        let d = self.coeffs.len();
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|j| {
                let mut e = vec![BigRational::zero(); d];
                e[j] = BigRational::one();
                self.mul_same_order(&Cyclotomic::new(self.order, e)).coeffs
            })
            .collect();
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        solve_rational_columns(&cols, &rhs).map(|x| Cyclotomic::new(self.order, x))
    }

    fn conj(&self) -> Self {
        self.galois(self.order - 1)
    }

    fn galois(&self, a: u32) -> Self {
        let n = self.order;
        if n <= 2 {
            return self.clone();
        }
        let mut c = vec![BigRational::zero(); n as usize];
        for (j, q) in self.coeffs.iter().enumerate() {
            if !q.is_zero() {
                let k = (j as u64 * a as u64 % n as u64) as usize;
                c[k] += q;
            }
        }
        Cyclotomic::new(n, c)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * PI * j as f64 / self.order as f64;
            z += Complex64::from_polar(rational_to_f64(c), angle);
        }
        z
    }

    fn field_order(&self) -> u32 {
        let s = self.simplify();
        // ℚ(ζ_n) = ℚ(ζ_2n) for odd n: report the even representative's odd part.
        if s.order % 4 == 2 {
            s.order / 2
        } else {
            s.order
        }
    }

    fn serialize(&self) -> String {
        if let Some(q) = self.rational_part() {
            return super::Rational(q.clone()).serialize();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| super::Rational(c.clone()).serialize()).collect();
        alloc::format!("Q(z{})[{}]", self.order, parts.join(","))
    }
}

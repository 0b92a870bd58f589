//! Floating-point spectra and float-guided exact root search.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Float;

use crate::scalar::{euler_phi, gcd, lcm, Scalar};

/// Eigenvalues of a square complex matrix given row-major; None if the QR iteration
/// does not converge.
pub fn eigenvalues(n: usize, entries: &[Complex64]) -> Option<Vec<Complex64>> {
    if n == 0 {
        return Some(Vec::new());
    }
    let m = DMatrix::from_row_slice(n, n, entries);
    let schur = nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 1000 * n)?;
    let (_, t) = schur.unpack();
    Some((0..n).map(|i| t[(i, i)]).collect())
}

/// Roots of a monic polynomial with complex coefficients (constant term first).
pub fn poly_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Some(Vec::new());
    }
    let lead = coeffs[d];
    let mut comp = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 1..d {
        comp[i * d + (i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..d {
        comp[i * d + (d - 1)] = -coeffs[i] / lead;
    }
    eigenvalues(d, &comp)
}

/// Groups nearby values; returns (center, multiplicity) sorted by (re, im).
pub fn cluster(values: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    for &v in values {
        match groups.iter_mut().find(|(c, _)| (*c - v).norm() <= radius) {
            Some((c, k)) => {
                *c = (*c * (*k as f64) + v) / (*k as f64 + 1.0);
                *k += 1;
            }
            None => groups.push((v, 1)),
        }
    }
    sort_complex(&mut groups, |g| g.0);
    groups
}

pub(crate) fn sort_complex<T>(items: &mut [T], key: impl Fn(&T) -> Complex64) {
    items.sort_by(|a, b| {
        let (x, y) = (key(a), key(b));
        let rx = Float::round(x.re * 1e6);
        let ry = Float::round(y.re * 1e6);
        rx.partial_cmp(&ry)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(Float::round(x.im * 1e6).partial_cmp(&Float::round(y.im * 1e6)).unwrap_or(core::cmp::Ordering::Equal))
    });
}

/// Best rational approximation with bounded denominator, if within `tol`.
fn rationalize(x: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = Float::floor(r);
        if Float::abs(a) > 1e15 {
            break;
        }
        let a = a as i128;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let approx = p1 as f64 / q1 as f64;
        if Float::abs(approx - x) <= tol {
            return Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        let frac = r - a as f64;
        if Float::abs(frac) < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    if q1 != 0 && Float::abs(p1 as f64 / q1 as f64 - x) <= tol {
        Some(BigRational::new(BigInt::from(p1), BigInt::from(q1)))
    } else {
        None
    }
}

fn eval_poly<F: Scalar>(coeffs: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Solves a small dense real system by Gaussian elimination with partial pivoting.
fn solve_real(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| Float::abs(a[i][c]).partial_cmp(&Float::abs(a[j][c])).unwrap())?;
        if Float::abs(a[p][c]) < 1e-12 {
            return None;
        }
        a.swap(c, p);
        b.swap(c, p);
        for i in 0..n {
            if i != c {
                let f = a[i][c] / a[c][c];
                for j in c..n {
                    a[i][j] -= f * a[c][j];
                }
                b[i] -= f * b[c];
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Finds all roots of a monic polynomial in ℚ(ζ_n), assuming they are simple and lie in
/// that field. Candidates come from floating-point roots under the complex embeddings
/// and are accepted only after exact verification.
pub fn exact_roots<F: Scalar>(coeffs: &[F], n: u32) -> Option<Vec<F>> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Some(Vec::new());
    }
    let mut n = coeffs.iter().fold(n.max(1) as u64, |acc, c| lcm(acc, c.field_order().max(1) as u64)) as u32;
    if n > 2 && n % 2 == 1 {
        // ℚ(ζ_n) = ℚ(ζ_2n); the even order keeps every stored representative coprime to
        // the Galois exponents used below.
        n *= 2;
    }
    let phi = euler_phi(n) as usize;
    let reps: Vec<u32> = if n <= 2 {
        vec![1]
    } else {
        (1..=n / 2).filter(|&a| gcd(a as u64, n as u64) == 1).collect()
    };
    let conj_roots: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|&a| {
            let c: Vec<Complex64> = coeffs.iter().map(|x| x.galois(a).to_complex()).collect();
            poly_roots(&c)
        })
        .collect::<Option<_>>()?;
    let mut primary = conj_roots[0].clone();
    sort_complex(&mut primary, |z| *z);

    let mut found: Vec<F> = Vec::new();
    for r in &primary {
        let mut accepted = None;
        let combos = conj_roots[1..].iter().map(|v| v.len()).product::<usize>();
        for mut combo in 0..combos.max(1) {
            let mut targets = vec![*r];
            for roots in &conj_roots[1..] {
                targets.push(roots[combo % roots.len()]);
                combo /= roots.len();
            }
            let coeffs_q = if n <= 2 {
                if Float::abs(r.im) > 1e-6 {
                    break;
                }
                vec![r.re]
            } else {
                let mut rows = Vec::with_capacity(phi);
                let mut rhs = Vec::with_capacity(phi);
                for (&a, t) in reps.iter().zip(&targets) {
                    let angle = |j: usize| 2.0 * PI * (a as f64) * (j as f64) / n as f64;
                    rows.push((0..phi).map(|j| Float::cos(angle(j))).collect::<Vec<_>>());
                    rhs.push(t.re);
                    rows.push((0..phi).map(|j| Float::sin(angle(j))).collect::<Vec<_>>());
                    rhs.push(t.im);
                }
                match solve_real(rows, rhs) {
                    Some(c) => c,
                    None => continue,
                }
            };
            let q: Option<Vec<BigRational>> = coeffs_q.iter().map(|&x| rationalize(x, 100_000, 1e-7)).collect();
            let Some(q) = q else { continue };
            let Some(candidate) = F::from_cyclotomic(if n <= 2 { 1 } else { n }, &q) else {
                continue;
            };
            if eval_poly(coeffs, &candidate).is_zero() && !found.iter().any(|f| f == &candidate) {
                accepted = Some(candidate);
                break;
            }
        }
        found.push(accepted?);
    }
    Some(found)
}

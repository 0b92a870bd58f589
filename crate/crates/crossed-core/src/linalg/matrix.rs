use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{residual, Scalar};

/// A dense row-major matrix. Zero rows or columns are allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Column vector.
    pub fn column(v: Vec<F>) -> Self {
        let n = v.len();
        Matrix::from_vec(n, 1, v)
    }

    /// Row vector.
    pub fn row(v: Vec<F>) -> Self {
        let n = v.len();
        Matrix::from_vec(1, n, v)
    }

    pub fn scalar(x: F) -> Self {
        Matrix::from_vec(1, 1, vec![x])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut F {
        &mut self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row_slice(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_vec(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch {:?} * {:?}", self.shape(), rhs.shape());
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let dst: &mut [F] = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    if !b.is_zero() {
                        d.mul_acc(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row_slice(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.mul_acc(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        self.map(|a| a.mul(s))
    }

    /// `self += s * rhs`
    pub fn axpy(&mut self, s: &F, rhs: &Matrix<F>) {
        assert_eq!(self.shape(), rhs.shape());
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                a.mul_acc(s, b);
            }
        }
    }

    /// Kronecker product with the left factor major.
    pub fn kron(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let (r1, c1) = self.shape();
        let (r2, c2) = rhs.shape();
        let mut out = Matrix::zeros(r1 * r2, c1 * c2);
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * r2 + i2, j1 * c2 + j2, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn adjoint(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc.add_assign(self.get(i, i));
        }
        acc
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().filter(|a| !a.is_zero()).map(|a| a.magnitude()).fold(0.0, f64::max)
    }

    /// Largest entrywise difference; exactly 0 when exact matrices agree.
    pub fn residual(&self, rhs: &Matrix<F>) -> f64 {
        if self.shape() != rhs.shape() {
            return f64::INFINITY;
        }
        self.data.iter().zip(&rhs.data).map(|(a, b)| residual(a, b)).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Matrix<F>, tol: f64) -> bool {
        if F::EXACT {
            self.shape() == rhs.shape() && self.data.iter().zip(&rhs.data).all(|(a, b)| a == b)
        } else {
            self.residual(rhs) <= tol
        }
    }

    pub fn is_zero_tol(&self, tol: f64) -> bool {
        self.data.iter().all(|a| a.near_zero(tol))
    }

    /// Reduced row echelon form and pivot columns. Entries below the rank threshold
    /// `tol · max(1, max|a|)` are treated as zero in the float backend.
    pub fn rref(&self, tol: f64) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let threshold = tol * self.max_abs().max(1.0);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot = if F::EXACT {
                (r..m.rows).find(|&i| !m.get(i, c).is_zero())
            } else {
                let mut best = None;
                let mut best_mag = threshold;
                for i in r..m.rows {
                    let mag = m.get(i, c).magnitude();
                    if mag > best_mag {
                        best_mag = mag;
                        best = Some(i);
                    }
                }
                best
            };
            let Some(p) = pivot else {
                if !F::EXACT {
                    for i in r..m.rows {
                        m.set(i, c, F::zero());
                    }
                }
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            m.set(r, c, F::one());
            let pivot_row: Vec<F> = m.row_slice(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let v = m.get(i, c + off).sub(&f.mul(pv));
                        m.set(i, c + off, v);
                    }
                }
                m.set(i, c, F::zero());
            }
            pivots.push(c);
            r += 1;
        }
        if !F::EXACT {
            for x in m.data.iter_mut() {
                if x.magnitude() <= threshold * 1e-3 {
                    *x = F::zero();
                }
            }
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, tol: f64) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref(tol).1.len()
    }

    /// Basis of the right kernel {x : A x = 0}.
    pub fn nullspace(&self, tol: f64) -> Vec<Vec<F>> {
        let n = self.cols;
        if self.rows == 0 {
            return (0..n)
                .map(|j| {
                    let mut v = vec![F::zero(); n];
                    v[j] = F::one();
                    v
                })
                .collect();
        }
        let (r, pivots) = self.rref(tol);
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); n];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · X = B`, returning a particular solution and a basis of the
    /// homogeneous solutions (as matrices shaped like X), or `None` if inconsistent.
    pub fn solve_linear(&self, b: &Matrix<F>, tol: f64) -> Option<(Matrix<F>, Vec<Matrix<F>>)> {
        assert_eq!(self.rows, b.rows, "solve_linear shape mismatch");
        let n = self.cols;
        let k = b.cols;
        let mut aug = Matrix::zeros(self.rows, n + k);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..k {
                aug.set(i, n + j, b.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref(tol);
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, k);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, r.get(i, n + j).clone());
            }
        }
        let kernel = self.nullspace(tol);
        let hom = kernel
            .iter()
            .flat_map(|v| {
                (0..k).map(move |col| {
                    let mut m = Matrix::zeros(n, k);
                    for (i, a) in v.iter().enumerate() {
                        m.set(i, col, a.clone());
                    }
                    m
                })
            })
            .collect();
        Some((x, hom))
    }

    pub fn inverse(&self, tol: f64) -> Result<Matrix<F>> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        match self.solve_linear(&Matrix::identity(n), tol) {
            Some((x, _)) if self.rank(tol) == n => Ok(x),
            _ => Err(Error::Singular("matrix has deficient rank".into())),
        }
    }

    /// Right partial trace: for `self` acting on A⊗B (dims a, b), returns the
    /// endomorphism of A obtained by tracing out B.
    pub fn partial_trace_right(&self, a: usize, b: usize) -> Matrix<F> {
        assert_eq!(self.shape(), (a * b, a * b));
        Matrix::from_fn(a, a, |i, j| {
            let mut acc = F::zero();
            for k in 0..b {
                acc.add_assign(self.get(i * b + k, j * b + k));
            }
            acc
        })
    }

    /// Flattens row-major into a vector.
    pub fn to_vec(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

/// Basis of the span of `vectors`, chosen among the inputs (first independent ones).
pub fn independent_subset<F: Scalar>(vectors: &[Vec<F>], tol: f64) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let n = vectors[0].len();
    // Columns are the vectors; pivots of the RREF pick an independent subset.
    let m = Matrix::from_fn(n, vectors.len(), |i, j| vectors[j][i].clone());
    m.rref(tol).1
}

/// A subspace with a fixed basis and a coordinate map.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    basis: Vec<Vec<F>>,
    left_inverse: Matrix<F>,
    ambient: usize,
}

impl<F: Scalar> Subspace<F> {
    /// `basis` must be linearly independent.
    pub fn new(basis: Vec<Vec<F>>, ambient: usize, tol: f64) -> Result<Self> {
        let k = basis.len();
        let b = Matrix::from_fn(ambient, k, |i, j| basis[j][i].clone());
        let gram = b.adjoint().mul(&b);
        let left_inverse = if k == 0 { Matrix::zeros(0, ambient) } else { gram.inverse(tol)?.mul(&b.adjoint()) };
        Ok(Subspace {
            basis,
            left_inverse,
            ambient,
        })
    }

    /// Span of arbitrary vectors (dependent ones are dropped).
    pub fn spanned_by(vectors: &[Vec<F>], ambient: usize, tol: f64) -> Result<Self> {
        let keep = independent_subset(vectors, tol);
        Self::new(keep.into_iter().map(|i| vectors[i].clone()).collect(), ambient, tol)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Coordinates of `v` (assumed to lie in the subspace).
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        self.left_inverse.mul_vec(v)
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    o.mul_acc(c, x);
                }
            }
        }
        out
    }

    /// Distance from `v` to its projection onto the subspace (0 iff contained, exactly
    /// for exact backends).
    pub fn membership_residual(&self, v: &[F]) -> f64 {
        let back = self.combine(&self.coords(v));
        back.iter().zip(v).map(|(a, b)| residual(a, b)).fold(0.0, f64::max)
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

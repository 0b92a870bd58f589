use alloc::vec;
use alloc::vec::Vec;

use super::Matrix;
use crate::scalar::Scalar;

/// A compressed-row sparse matrix, used for structure maps (braidings, duality maps,
/// coproducts) whose dense forms would be large and mostly zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Sparse<F> {
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    vals: Vec<F>,
}

impl<F: Scalar> Sparse<F> {
    /// Builds from (row, col, value) triplets; duplicates are summed, zeros dropped.
    pub fn from_triplets(rows: usize, cols: usize, mut entries: Vec<(usize, usize, F)>) -> Self {
        entries.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut row_ptr = vec![0; rows + 1];
        let mut col_idx: Vec<usize> = Vec::with_capacity(entries.len());
        let mut vals: Vec<F> = Vec::with_capacity(entries.len());
        let mut last: Option<(usize, usize)> = None;
        let mut row_of: Vec<usize> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "sparse entry out of bounds");
            if last == Some((r, c)) {
                let top = vals.last_mut().unwrap();
                *top = top.add(&v);
            } else {
                col_idx.push(c);
                vals.push(v);
                row_of.push(r);
                last = Some((r, c));
            }
        }
        let mut keep_cols = Vec::with_capacity(col_idx.len());
        let mut keep_vals = Vec::with_capacity(vals.len());
        for ((c, v), r) in col_idx.into_iter().zip(vals).zip(row_of) {
            if !v.is_zero() {
                keep_cols.push(c);
                keep_vals.push(v);
                row_ptr[r + 1] += 1;
            }
        }
        for i in 0..rows {
            row_ptr[i + 1] += row_ptr[i];
        }
        Sparse {
            rows,
            cols,
            row_ptr,
            col_idx: keep_cols,
            vals: keep_vals,
        }
    }

    pub fn identity(n: usize) -> Self {
        Sparse {
            rows: n,
            cols: n,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n).collect(),
            vals: vec![F::one(); n],
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Sparse {
            rows,
            cols,
            row_ptr: vec![0; rows + 1],
            col_idx: Vec::new(),
            vals: Vec::new(),
        }
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = m.get(i, j);
                if !v.is_zero() {
                    entries.push((i, j, v.clone()));
                }
            }
        }
        Self::from_triplets(m.rows(), m.cols(), entries)
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    #[inline]
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &F)> {
        let (a, b) = (self.row_ptr[i], self.row_ptr[i + 1]);
        self.col_idx[a..b].iter().copied().zip(&self.vals[a..b])
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        (0..self.rows).flat_map(move |i| self.row(i).map(move |(j, v)| (i, j, v)))
    }

    /// I_left ⊗ self ⊗ I_right.
    pub fn embed(&self, left: usize, right: usize) -> Self {
        if left == 1 && right == 1 {
            return self.clone();
        }
        let (m, k) = (self.rows, self.cols);
        let mut entries = Vec::with_capacity(self.nnz() * left * right);
        for a in 0..left {
            for (i, j, v) in self.triplets() {
                for b in 0..right {
                    entries.push((a * m * right + i * right + b, a * k * right + j * right + b, v.clone()));
                }
            }
        }
        Self::from_triplets(left * m * right, left * k * right, entries)
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, rhs: &Sparse<F>) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * rhs.nnz());
        for (i1, j1, a) in self.triplets() {
            for (i2, j2, b) in rhs.triplets() {
                entries.push((i1 * rhs.rows + i2, j1 * rhs.cols + j2, a.mul(b)));
            }
        }
        Self::from_triplets(self.rows * rhs.rows, self.cols * rhs.cols, entries)
    }

    /// self · rhs
    pub fn mul(&self, rhs: &Sparse<F>) -> Self {
        assert_eq!(self.cols, rhs.rows, "sparse product shape mismatch");
        let mut entries = Vec::new();
        let mut acc: Vec<Option<F>> = vec![None; rhs.cols];
        let mut touched = Vec::new();
        for i in 0..self.rows {
            for (k, a) in self.row(i) {
                for (j, b) in rhs.row(k) {
                    match &mut acc[j] {
                        Some(x) => x.mul_acc(a, b),
                        slot @ None => {
                            *slot = Some(a.mul(b));
                            touched.push(j);
                        }
                    }
                }
            }
            for &j in &touched {
                if let Some(v) = acc[j].take() {
                    entries.push((i, j, v));
                }
            }
            touched.clear();
        }
        Self::from_triplets(self.rows, rhs.cols, entries)
    }

    /// self · rhs with a dense right factor.
    pub fn mul_dense(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows(), "sparse·dense shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols());
        for i in 0..self.rows {
            for (k, a) in self.row(i) {
                for j in 0..rhs.cols() {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.get_mut(i, j).mul_acc(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let entries = self.triplets().map(|(i, j, v)| (j, i, v.clone())).collect();
        Self::from_triplets(self.cols, self.rows, entries)
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = self.clone();
        for v in out.vals.iter_mut() {
            *v = v.mul(s);
        }
        out
    }

    pub fn add(&self, rhs: &Sparse<F>) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.triplets().chain(rhs.triplets()).map(|(i, j, v)| (i, j, v.clone())).collect();
        Self::from_triplets(self.rows, self.cols, entries)
    }

    pub fn residual(&self, rhs: &Sparse<F>) -> f64 {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return f64::INFINITY;
        }
        let diff = self.add(&rhs.scale(&F::one().neg()));
        diff.vals.iter().map(|v| v.magnitude()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Sparse<F>, tol: f64) -> bool {
        if F::EXACT {
            (self.rows, self.cols) == (rhs.rows, rhs.cols) && self.add(&rhs.scale(&F::one().neg())).nnz() == 0
        } else {
            self.residual(rhs) <= tol
        }
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            for (j, v) in self.row(i) {
                if j == i {
                    acc.add_assign(v);
                }
            }
        }
        acc
    }
}

impl<F: Scalar> Matrix<F> {
    /// self · rhs with a sparse right factor.
    pub fn mul_sparse(&self, rhs: &Sparse<F>) -> Matrix<F> {
        assert_eq!(self.cols(), rhs.rows(), "dense·sparse shape mismatch {:?} * {:?}", self.shape(), (rhs.rows(), rhs.cols()));
        let mut out: Matrix<F> = Matrix::zeros(self.rows(), rhs.cols());
        for i in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k) {
                    out.get_mut(i, j).mul_acc(a, b);
                }
            }
        }
        out
    }
}

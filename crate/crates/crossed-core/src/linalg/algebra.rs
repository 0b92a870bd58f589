//! Finite-dimensional associative algebras and their minimal idempotents.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use super::eigen::{cluster, eigenvalues, exact_roots};
use super::{independent_subset, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An algebra with a chosen basis b_0..b_{n-1}, presented by its left-regular matrices:
/// column j of `left[i]` holds the coordinates of b_i·b_j.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation<F> {
    left: Vec<Matrix<F>>,
    unit: Vec<F>,
    labels: Vec<String>,
}

impl<F: Scalar> AlgebraPresentation<F> {
    /// Builds from a product rule on basis indices; checks associativity and the unit.
    pub fn from_products(n: usize, unit: Vec<F>, product: impl Fn(usize, usize) -> Vec<F>, tol: f64) -> Result<Self> {
        let mut left = vec![Matrix::zeros(n, n); n];
        for (i, l) in left.iter_mut().enumerate() {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(Error::BadAlgebra(format!("product b{i}·b{j} has {} coordinates, expected {n}", v.len())));
                }
                for (k, x) in v.into_iter().enumerate() {
                    l.set(k, j, x);
                }
            }
        }
        Self::new(left, unit, tol)
    }

    pub fn new(left: Vec<Matrix<F>>, unit: Vec<F>, tol: f64) -> Result<Self> {
        let n = left.len();
        if unit.len() != n || left.iter().any(|m| m.shape() != (n, n)) {
            return Err(Error::BadAlgebra("inconsistent dimensions".into()));
        }
        let alg = AlgebraPresentation {
            labels: (0..n).map(|i| format!("b{i}")).collect(),
            left,
            unit,
        };
        let check_tol = tol.max(1e-12) * 1e3;
        for i in 0..n {
            for j in 0..n {
                let lhs = alg.left_matrix(&alg.left[i].column_vec(j));
                let rhs = alg.left[i].mul(&alg.left[j]);
                if !lhs.approx_eq(&rhs, check_tol) {
                    return Err(Error::BadAlgebra(format!("not associative at (b{i}, b{j}, ·)")));
                }
            }
        }
        let id = Matrix::identity(n);
        if !alg.left_matrix(&alg.unit).approx_eq(&id, check_tol) {
            return Err(Error::BadAlgebra("unit is not a left unit".into()));
        }
        for i in 0..n {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            let v = alg.left[i].mul_vec(&alg.unit);
            if !Matrix::column(v).approx_eq(&Matrix::column(e), check_tol) {
                return Err(Error::BadAlgebra("unit is not a right unit".into()));
            }
        }
        Ok(alg)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.left.len()
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        let mut e = vec![F::zero(); self.dim()];
        e[i] = F::one();
        e
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_matrix(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (c, l) in a.iter().zip(&self.left) {
            if !c.is_zero() {
                m.axpy(c, l);
            }
        }
        m
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.left_matrix(a).mul_vec(b)
    }

    pub fn add(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn scale(&self, s: &F, a: &[F]) -> Vec<F> {
        a.iter().map(|x| x.mul(s)).collect()
    }

    /// Basis of the center, from the commutation equations z·b_j = b_j·z.
    pub fn center(&self, tol: f64) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut eqs = Matrix::zeros(n * n, n);
        for j in 0..n {
            // Column i of the block: b_i·b_j - b_j·b_i.
            for i in 0..n {
                for k in 0..n {
                    let v = self.left[i].get(k, j).sub(self.left[j].get(k, i));
                    eqs.set(j * n + k, i, v);
                }
            }
        }
        eqs.nullspace(tol)
    }

    /// Whether `e` is an idempotent, within `tol` in the float backend.
    pub fn idempotent_residual(&self, e: &[F]) -> f64 {
        let sq = self.mul(e, e);
        Matrix::column(sq).residual(&Matrix::column(e.to_vec()))
    }

    /// Dimension of e·A·e.
    pub fn corner_dim(&self, e: &[F], tol: f64) -> usize {
        let n = self.dim();
        let vecs: Vec<Vec<F>> = (0..n).map(|k| self.mul(&self.mul(e, &self.basis_element(k)), e)).collect();
        independent_subset(&vecs, tol).len()
    }

    fn minimal_polynomial(&self, a: &[F], unit: &[F], tol: f64) -> Vec<F> {
        let mut powers = vec![unit.to_vec()];
        loop {
            let next = self.mul(a, powers.last().unwrap());
            let k = powers.len();
            let v = Matrix::from_fn(self.dim(), k, |i, j| powers[j][i].clone());
            if let Some((c, _)) = v.solve_linear(&Matrix::column(next.clone()), tol) {
                let mut poly: Vec<F> = (0..k).map(|i| c.get(i, 0).neg()).collect();
                poly.push(F::one());
                return poly;
            }
            powers.push(next);
        }
    }
}

/// Options for [`split_idempotents`].
#[derive(Clone, Copy, Debug)]
pub struct SplitOptions {
    pub tol: f64,
    /// Cyclotomic order N of the field searched for exact eigenvalues.
    pub field_order: u32,
    /// Random candidate elements tried per block before giving up.
    pub retries: usize,
}

impl SplitOptions {
    pub fn new(tol: f64, field_order: u32) -> Self {
        SplitOptions {
            tol,
            field_order,
            retries: 32,
        }
    }
}

/// One simple block of a split semisimple algebra.
#[derive(Clone, Debug)]
pub struct Block<F> {
    /// Central idempotent of the block.
    pub central: Vec<F>,
    /// n, where the block is isomorphic to M_n.
    pub size: usize,
    /// n orthogonal minimal idempotents summing to `central`.
    pub minimal: Vec<Vec<F>>,
}

/// Complete decomposition of a split semisimple algebra.
#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub center: Vec<Vec<F>>,
    pub blocks: Vec<Block<F>>,
}

impl<F: Scalar> Decomposition<F> {
    pub fn minimal_idempotents(&self) -> Vec<Vec<F>> {
        self.blocks.iter().flat_map(|b| b.minimal.iter().cloned()).collect()
    }

    pub fn central_idempotents(&self) -> Vec<Vec<F>> {
        self.blocks.iter().map(|b| b.central.clone()).collect()
    }
}

/// Random integer coordinates; the range grows with n so that n coordinates are
/// pairwise distinct with reasonable probability.
fn small_random<F: Scalar, R: Rng>(rng: &mut R, n: usize) -> Vec<F> {
    let r = (2 * n as i64).max(3);
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-r..=r)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(F::from_i64).collect();
        }
    }
}

/// Newton iteration e ↦ 3e² − 2e³ pulling a float near-idempotent onto an idempotent.
fn polish<F: Scalar>(alg: &AlgebraPresentation<F>, e: Vec<F>) -> Vec<F> {
    if F::EXACT {
        return e;
    }
    let mut e = e;
    for _ in 0..4 {
        let e2 = alg.mul(&e, &e);
        let e3 = alg.mul(&e2, &e);
        e = alg.sub(&alg.scale(&F::from_i64(3), &e2), &alg.scale(&F::from_i64(2), &e3));
    }
    e
}

/// Lagrange projections Π_{k≠i} (a − λ_k·u)/(λ_i − λ_k) inside the algebra.
fn lagrange_projections<F: Scalar>(alg: &AlgebraPresentation<F>, a: &[F], unit: &[F], roots: &[F]) -> Vec<Vec<F>> {
    roots
        .iter()
        .enumerate()
        .map(|(i, li)| {
            let mut p = unit.to_vec();
            for (k, lk) in roots.iter().enumerate() {
                if k == i {
                    continue;
                }
                let factor = alg.sub(a, &alg.scale(lk, unit));
                let denom = li.sub(lk).inv().expect("distinct eigenvalues");
                p = alg.scale(&denom, &alg.mul(&p, &factor));
            }
            p
        })
        .collect()
}

/// Distinct eigenvalues of left multiplication by `a` on the subspace `block`
/// (spanned by `e·A`), each expected with multiplicity `mult`.
fn float_spectrum<F: Scalar>(alg: &AlgebraPresentation<F>, a: &[F], block: &Subspace<F>, mult: usize, tol: f64) -> Option<Vec<F>> {
    let d = block.dim();
    let la = alg.left_matrix(a);
    let mut entries = Vec::with_capacity(d * d);
    let cols: Vec<Vec<F>> = block.basis().iter().map(|b| block.coords(&la.mul_vec(b))).collect();
    for i in 0..d {
        for col in &cols {
            entries.push(col[i].to_complex());
        }
    }
    let ev = eigenvalues(d, &entries)?;
    let scale = ev.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let radius = (num_traits::Float::sqrt(tol) * scale).max(1e-7 * scale);
    let groups = cluster(&ev, radius);
    if groups.iter().any(|(_, k)| *k != mult) {
        return None;
    }
    for (i, (a, _)) in groups.iter().enumerate() {
        for (b, _) in &groups[i + 1..] {
            if (*a - *b).norm() < 1e2 * radius {
                return None;
            }
        }
    }
    Some(groups.into_iter().map(|(z, _)| from_complex::<F>(z)).collect())
}

fn from_complex<F: Scalar>(z: Complex64) -> F {
    F::from_complex(z).expect("float spectra are only computed in the float backend")
}

/// Splits a semisimple algebra into minimal orthogonal idempotents summing to 1.
///
/// The center is found by solving the commutation equations; a generic central element
/// separates the blocks, and a generic element of each block separates its minimal
/// idempotents through Lagrange projections. Exact backends search eigenvalues in
/// ℚ(ζ_N) and fail with [`Error::ExactSplitUnsupported`] when no candidate splits.
pub fn split_idempotents<F: Scalar, R: Rng>(alg: &AlgebraPresentation<F>, opts: SplitOptions, rng: &mut R) -> Result<Decomposition<F>> {
    let n = alg.dim();
    let tol = opts.tol;
    if n == 0 {
        return Ok(Decomposition {
            center: Vec::new(),
            blocks: Vec::new(),
        });
    }
    let center = alg.center(tol);
    let c = center.len();
    let unit = alg.unit().to_vec();

    let centrals: Vec<Vec<F>> = if c == 1 {
        vec![unit.clone()]
    } else {
        let space = Subspace::new(center.clone(), n, tol)?;
        let mut result = None;
        for _ in 0..opts.retries {
            let r: Vec<F> = small_random(rng, c);
            let z = space.combine(&r);
            let roots = if F::EXACT {
                let poly = alg.minimal_polynomial(&z, &unit, tol);
                if poly.len() != c + 1 {
                    continue;
                }
                match exact_roots(&poly, opts.field_order) {
                    Some(r) if r.len() == c => r,
                    _ => continue,
                }
            } else {
                match float_spectrum(alg, &z, &space, 1, tol) {
                    Some(r) if r.len() == c => r,
                    _ => continue,
                }
            };
            result = Some(lagrange_projections(alg, &z, &unit, &roots));
            break;
        }
        match result {
            Some(r) => r.into_iter().map(|e| polish(alg, e)).collect(),
            None if F::EXACT => {
                return Err(Error::ExactSplitUnsupported(format!(
                    "no central element with eigenvalues in Q(zeta_{}) after {} tries",
                    opts.field_order, opts.retries
                )))
            }
            None => return Err(Error::NonIdempotentResidual(f64::INFINITY)),
        }
    };

    let mut blocks = Vec::with_capacity(centrals.len());
    for e in centrals {
        let spanning: Vec<Vec<F>> = (0..n).map(|k| alg.mul(&e, &alg.basis_element(k))).collect();
        let keep = independent_subset(&spanning, tol);
        let d = keep.len();
        let size = (1..=d).find(|s| s * s >= d).unwrap_or(0);
        if size * size != d {
            return Err(Error::BadAlgebra(format!("block of dimension {d} is not a full matrix algebra")));
        }
        if size == 1 {
            blocks.push(Block {
                central: e.clone(),
                size,
                minimal: vec![e],
            });
            continue;
        }
        let block_space = Subspace::new(keep.iter().map(|&i| spanning[i].clone()).collect(), n, tol)?;
        let mut minimal = None;
        // Basis elements first, then random combinations.
        let candidates = n + opts.retries;
        for attempt in 0..candidates {
            let raw = if attempt < n { alg.basis_element(attempt) } else { small_random(rng, n) };
            let a = alg.mul(&e, &raw);
            let roots = if F::EXACT {
                let poly = alg.minimal_polynomial(&a, &e, tol);
                if poly.len() != size + 1 {
                    continue;
                }
                match exact_roots(&poly, opts.field_order) {
                    Some(r) if r.len() == size => r,
                    _ => continue,
                }
            } else {
                match float_spectrum(alg, &a, &block_space, size, tol) {
                    Some(r) if r.len() == size => r,
                    _ => continue,
                }
            };
            let projections: Vec<Vec<F>> = lagrange_projections(alg, &a, &e, &roots).into_iter().map(|p| polish(alg, p)).collect();
            if projections.iter().all(|p| alg.corner_dim(p, tol) == 1) {
                minimal = Some(projections);
                break;
            }
        }
        let Some(minimal) = minimal else {
            return Err(if F::EXACT {
                Error::ExactSplitUnsupported(format!(
                    "no element of an M_{size} block has a split characteristic polynomial over Q(zeta_{})",
                    opts.field_order
                ))
            } else {
                Error::NonIdempotentResidual(f64::INFINITY)
            });
        };
        blocks.push(Block { central: e, size, minimal });
    }

    let decomposition = Decomposition { center, blocks };
    verify_split(alg, &decomposition, tol)?;
    Ok(decomposition)
}

fn verify_split<F: Scalar>(alg: &AlgebraPresentation<F>, d: &Decomposition<F>, tol: f64) -> Result<()> {
    let all = d.minimal_idempotents();
    let n = alg.dim();
    let mut worst: f64 = 0.0;
    let mut sum = vec![F::zero(); n];
    for (i, e) in all.iter().enumerate() {
        sum = alg.add(&sum, e);
        worst = worst.max(alg.idempotent_residual(e));
        for f in &all[i + 1..] {
            let ef = Matrix::column(alg.mul(e, f));
            let fe = Matrix::column(alg.mul(f, e));
            worst = worst.max(ef.max_abs()).max(fe.max_abs());
        }
    }
    worst = worst.max(Matrix::column(sum).residual(&Matrix::column(alg.unit().to_vec())));
    let bound = if F::EXACT { 0.0 } else { tol };
    if worst > bound {
        return Err(Error::NonIdempotentResidual(worst));
    }
    Ok(())
}

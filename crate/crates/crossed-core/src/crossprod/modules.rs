//! Γ-modules in C as an independent count of the simples of C⋊S.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{ConcreteCategory, Object};
use crate::error::Result;
use crate::frobenius::FrobeniusAlgebra;
use crate::linalg::{split_idempotents, AlgebraPresentation, Matrix, Sparse, SplitOptions, Subspace};
use crate::scalar::Scalar;

/// A simple Γ-module, realized as the image of a minimal idempotent e of End_Γ(F(X)).
#[derive(Clone, Debug)]
pub struct SimpleModule<F> {
    /// Index of X, where the module is a summand of the free module F(X) = (Γ⊗X, m⊗1).
    pub base: usize,
    pub idempotent: Matrix<F>,
    /// Tr_C(e) / d(Γ): the dimension in Γ-Mod_C.
    pub dim: F,
}

#[derive(Clone, Debug)]
pub struct ModuleOracle<F> {
    pub simples: Vec<SimpleModule<F>>,
    /// Σ dim² over simple modules.
    pub total_dimension: F,
    /// dim C / d(Γ).
    pub expected_total: F,
    /// Worst residual of the module axioms on free modules.
    pub axiom_residual: f64,
    /// Pairs (X, Y) where dim Hom_Γ(F(X), F(Y)) ≠ dim Hom_C(X, Γ⊗Y).
    pub adjunction_failures: Vec<(usize, usize)>,
    /// dim End_Γ(F(𝟙)).
    pub unit_endomorphisms: usize,
}

/// Basis of Hom_Γ(F(X), F(Y)): morphisms f: Γ⊗X → Γ⊗Y of C with f∘(m⊗1) = (m⊗1)∘(1_Γ⊗f).
pub fn module_homs<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, x: &Object<F>, y: &Object<F>) -> Result<Vec<Matrix<F>>> {
    let tol = cat.tol();
    let n = frob.dim();
    let gx = cat.tensor(&frob.object, x);
    let gy = cat.tensor(&frob.object, y);
    let basis = cat.hom_basis(&gx, &gy);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mu_x = frob.m.embed(1, x.dim());
    let mu_y = frob.m.embed(1, y.dim());
    let columns: Vec<Vec<F>> = basis
        .iter()
        .map(|f| {
            let lhs = f.mul_sparse(&mu_x);
            let rhs = mu_y.mul_dense(&Sparse::from_dense(f).embed(n, 1).to_dense());
            lhs.sub(&rhs).into_data()
        })
        .collect();
    let rows = columns[0].len();
    let system = Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone());
    Ok(system
        .nullspace(tol)
        .into_iter()
        .map(|c| {
            let mut f = Matrix::zeros(gy.dim(), gx.dim());
            for (coef, b) in c.iter().zip(&basis) {
                if !coef.is_zero() {
                    f.axpy(coef, b);
                }
            }
            f
        })
        .collect())
}

fn end_presentation<F: Scalar>(basis: &[Matrix<F>], tol: f64) -> Result<AlgebraPresentation<F>> {
    let k = basis.len();
    let dim = basis[0].rows();
    let flat: Vec<Vec<F>> = basis.iter().map(|b| b.clone().into_data()).collect();
    let space = Subspace::new(flat, dim * dim, tol)?;
    let unit = space.coords(Matrix::identity(dim).data());
    let products: Vec<Vec<Vec<F>>> = (0..k).map(|a| (0..k).map(|b| space.coords(basis[a].mul(&basis[b]).data())).collect()).collect();
    AlgebraPresentation::from_products(k, unit, |a, b| products[a][b].clone(), tol)
}

pub fn module_oracle<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, seed: u64) -> Result<ModuleOracle<F>> {
    let tol = cat.tol();
    let n = frob.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gamma_dim = cat.dim(&frob.object);
    let gamma_inv = gamma_dim.inv().ok_or_else(|| crate::error::Error::Singular("d(Γ) = 0".into()))?;
    let k = cat.simples().len();

    let mut axiom_residual: f64 = 0.0;
    for x in cat.simples() {
        let mu = frob.m.embed(1, x.dim());
        let assoc_l = mu.mul(&mu.embed(n, 1));
        let assoc_r = mu.mul(&frob.m.embed(1, n * x.dim()));
        let unit = mu.mul(&frob.eta.embed(1, n * x.dim()));
        axiom_residual = axiom_residual.max(assoc_l.residual(&assoc_r)).max(unit.residual(&Sparse::identity(n * x.dim())));
    }

    let mut adjunction_failures = Vec::new();
    let mut homs: Vec<Vec<Option<Vec<Matrix<F>>>>> = (0..k).map(|_| (0..k).map(|_| None).collect()).collect();
    for i in 0..k {
        for j in 0..k {
            let h = module_homs(cat, frob, cat.simple(i), cat.simple(j))?;
            let gy = cat.tensor(&frob.object, cat.simple(j));
            if h.len() != cat.hom_dim(cat.simple(i), &gy) {
                adjunction_failures.push((i, j));
            }
            homs[i][j] = Some(h);
        }
    }
    let unit_idx = crate::generators::unit_index(cat);
    let unit_endomorphisms = homs[unit_idx][unit_idx].as_ref().map(|h| h.len()).unwrap_or(0);

    let mut simples: Vec<SimpleModule<F>> = Vec::new();
    for i in 0..k {
        let ends = homs[i][i].as_ref().expect("computed above");
        if ends.is_empty() {
            continue;
        }
        let alg = end_presentation(ends, tol)?;
        let split = split_idempotents(&alg, SplitOptions::new(tol, cat.field_order()), &mut rng)?;
        let gx = cat.tensor(&frob.object, cat.simple(i));
        for block in &split.blocks {
            let mut e = Matrix::zeros(gx.dim(), gx.dim());
            for (c, b) in block.minimal[0].iter().zip(ends) {
                if !c.is_zero() {
                    e.axpy(c, b);
                }
            }
            let known = simples.iter().any(|s| {
                homs[s.base][i]
                    .as_ref()
                    .expect("computed above")
                    .iter()
                    .any(|f| !e.mul(f).mul(&s.idempotent).is_zero_tol(tol))
            });
            if !known {
                let dim = cat.trace(&e, &gx).mul(&gamma_inv);
                simples.push(SimpleModule { base: i, idempotent: e, dim });
            }
        }
    }
    let total_dimension = simples.iter().fold(F::zero(), |acc, s| acc.add(&s.dim.mul(&s.dim)));
    let expected_total = cat.global_dimension().mul(&gamma_inv);
    Ok(ModuleOracle {
        simples,
        total_dimension,
        expected_total,
        axiom_residual,
        adjunction_failures,
        unit_endomorphisms,
    })
}

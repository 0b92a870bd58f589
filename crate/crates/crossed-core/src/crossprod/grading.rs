use alloc::vec::Vec;

use super::{CrossedProduct, ExtMorphism, ExtObject};
use crate::category::Object;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// The grade of a homogeneous object: the endomorphism ∂ of Γ, the nearest group
/// element and the diagnostics used to accept or reject the match.
#[derive(Clone, Debug)]
pub struct GradeInfo<F> {
    pub matrix: Matrix<F>,
    /// Index in G, if the match passed the margin test.
    pub element: Option<usize>,
    pub residual: f64,
    /// Residual of the runner-up automorphism.
    pub runner_up: f64,
    /// ‖∂″ − ∂′ ⊗̂ p‖, zero exactly when the object is homogeneous.
    pub homogeneity: f64,
    /// ‖∂′∘Δ − ∂‖ between the two evaluations.
    pub consistency: f64,
    /// Whether the homogeneity residual passed.
    pub homogeneous: bool,
}

impl<F: Scalar> GradeInfo<F> {
    pub fn element(&self) -> Result<usize> {
        match self.element {
            Some(g) => Ok(g),
            None if !self.homogeneous => Err(Error::Inhomogeneous(self.homogeneity)),
            None => Err(Error::NoMatchingAutomorphism(self.residual)),
        }
    }
}

/// Accepts the nearest automorphism when it is within `tol` and the runner-up is more
/// than 10·tol away (exact backends: residual exactly zero).
pub(crate) fn accept(best: f64, runner_up: f64, tol: f64, exact: bool) -> bool {
    if exact {
        best == 0.0
    } else {
        best <= tol && runner_up > 10.0 * tol
    }
}

impl<'a, F: Scalar> CrossedProduct<'a, F> {
    /// ∂(X,p) = d(X,p)⁻¹ · (1_Γ ⊗ Tr_X)[M̃ ∘ (1_Γ⊗p) ∘ (Δ⊗1_X)].
    pub fn grade_matrix(&self, x: &ExtObject<F>) -> Result<Matrix<F>> {
        let d = self.dim(x);
        let dinv = d.inv().ok_or_else(|| Error::Singular(alloc::format!("d({}) = 0", x.label)))?;
        let n = self.frob.dim();
        let mono = self.inverse_monodromy(&x.base);
        let lifted = crate::linalg::Sparse::from_dense(&x.p).embed(n, 1);
        // (1_Γ⊗p)∘(Δ⊗1_X) as a dense map Γ⊗X → Γ⊗X.
        let inner = mono.mul_dense(&lifted.mul_dense(&self.frob.delta.embed(1, x.base.dim()).to_dense()));
        Ok(self.cat.right_partial_trace(&inner, &x.base).scale(&dinv))
    }

    /// ∂′ ∈ End(ι(Γ)) extracted from ∂″ = ι(M̃) ∘̂ (1_Γ ⊗̂ p), with ‖∂″ − ∂′ ⊗̂ p‖.
    pub fn grade_prime(&self, x: &ExtObject<F>) -> Result<(Matrix<F>, f64)> {
        let d = self.dim(x);
        let dinv = d.inv().ok_or_else(|| Error::Singular(alloc::format!("d({}) = 0", x.label)))?;
        let g = self.gamma().clone();
        let gx = self.cat.tensor(&g, &x.base);
        let mono = self.iota(&self.inverse_monodromy(&x.base).to_dense(), &gx, &gx);
        let one_p = self.tensor(&self.identity(&g), &x.idempotent());
        let dpp = self.compose(&mono, &one_p)?;
        let dp = self.cat.right_partial_trace(&dpp.s, &x.base).scale(&dinv);
        let dp_m = ExtMorphism {
            source: g.clone(),
            target: g,
            s: dp.clone(),
        };
        let rebuilt = self.tensor(&dp_m, &x.idempotent());
        Ok((dp, dpp.s.residual(&rebuilt.s)))
    }

    /// Full grade computation with matching against G.
    pub fn grade(&self, x: &ExtObject<F>) -> Result<GradeInfo<F>> {
        let matrix = self.grade_matrix(x)?;
        let (dp, homogeneity) = self.grade_prime(x)?;
        let consistency = dp.mul_sparse(&self.frob.delta).residual(&matrix);
        Ok(self.classify(matrix, homogeneity, consistency))
    }

    pub(crate) fn classify(&self, matrix: Matrix<F>, homogeneity: f64, consistency: f64) -> GradeInfo<F> {
        let (best, residual, runner_up) = self.frob.match_automorphism(&matrix);
        let tol = self.cat.tol();
        let homogeneous = if F::EXACT { homogeneity == 0.0 } else { homogeneity <= tol };
        let ok = accept(residual, runner_up, tol, F::EXACT) && homogeneous;
        GradeInfo {
            homogeneous,
            matrix,
            element: ok.then_some(best),
            residual,
            runner_up,
            homogeneity,
            consistency,
        }
    }
}

/// ∂₀X = d(X)⁻¹ (1_Γ ⊗ Tr_X)(M̃) for a simple X of C, when G is abelian.
pub fn abelian_grade<F: Scalar>(cp: &CrossedProduct<'_, F>, x: &Object<F>) -> Result<GradeInfo<F>> {
    if !cp.frob.group.is_abelian() {
        return Err(Error::Unsupported("the abelian grading needs an abelian group".into()));
    }
    let d = cp.cat.dim(x);
    let dinv = d.inv().ok_or_else(|| Error::Singular(alloc::format!("d({}) = 0", x.label())))?;
    let mono = cp.inverse_monodromy(x).to_dense();
    let matrix = cp.cat.right_partial_trace(&mono, x).scale(&dinv);
    Ok(cp.classify(matrix, 0.0, 0.0))
}

/// φ_X(k) for the invertible S-simples X_k: the scalar by which c_{X,X_k}∘c_{X_k,X}
/// acts, i.e. (1_{X_k} ⊗ Tr_X)(monodromy) / d(X).
pub fn character_of<F: Scalar>(cp: &CrossedProduct<'_, F>, x: &Object<F>) -> Result<Vec<F>> {
    let cat = cp.cat;
    let d = cat.dim(x);
    let dinv = d.inv().ok_or_else(|| Error::Singular(alloc::format!("d({}) = 0", x.label())))?;
    cp.frob
        .subcategory
        .simples
        .iter()
        .map(|&k| {
            let xk = cat.simple(k);
            if xk.dim() != 1 {
                return Err(Error::Unsupported("character needs invertible S-simples".into()));
            }
            let mono = cat.monodromy_sparse(xk, x).to_dense();
            let t = cat.right_partial_trace(&mono, x);
            Ok(t.get(0, 0).mul(&dinv))
        })
        .collect()
}

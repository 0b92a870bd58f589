//! The crossed product C⋊S.
//!
//! Morphisms X → Y of C⋊₀S are morphisms Γ⊗X → Y of C, composed and tensored by
//!
//! t ∘̂ s = t ∘ (1_Γ⊗s) ∘ (Δ⊗1_X),
//! s ⊗̂ t = (s⊗t) ∘ (1_Γ⊗c_{Γ,X}⊗1_Z) ∘ (Δ⊗1_X⊗1_Z).
//!
//! C⋊S is its idempotent completion: objects (X, p) with p ∘̂ p = p.

mod braiding;
mod grading;
mod modules;
mod simples;
mod spectrum;

pub use braiding::{crossed_braiding, crossed_braiding_inverse};
pub use grading::{abelian_grade, character_of, GradeInfo};
pub use modules::{module_oracle, ModuleOracle, SimpleModule};
pub use simples::{CrossedCategory, CrossedSimple};
pub use spectrum::{fixed_subgroup, grade_zero_part, transparent_relative, zcenter, GradeZero, Transparency};

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::category::{ConcreteCategory, Object};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;
use crate::group::FiniteGroup;
use crate::linalg::{split_idempotents, AlgebraPresentation, Matrix, Sparse, SplitOptions, Subspace};
use crate::scalar::Scalar;

/// A morphism X → Y of C⋊₀S, carried by s ∈ Hom_C(Γ⊗X, Y).
#[derive(Clone, Debug)]
pub struct ExtMorphism<F> {
    pub source: Object<F>,
    pub target: Object<F>,
    pub s: Matrix<F>,
}

/// An object (X, p) of C⋊S.
#[derive(Clone, Debug)]
pub struct ExtObject<F> {
    pub base: Object<F>,
    pub p: Matrix<F>,
    pub label: String,
}

impl<F: Scalar> ExtObject<F> {
    pub fn idempotent(&self) -> ExtMorphism<F> {
        ExtMorphism {
            source: self.base.clone(),
            target: self.base.clone(),
            s: self.p.clone(),
        }
    }
}

/// The calculus of C⋊₀S over a fixed ambient category and regular algebra.
#[derive(Debug)]
pub struct CrossedProduct<'a, F> {
    pub cat: &'a ConcreteCategory<F>,
    pub frob: &'a FrobeniusAlgebra<F>,
    /// The automorphism precomposed by γ_g; g ↦ g⁻¹. Replaceable to build faulty
    /// fixtures.
    pub action_index: fn(&FiniteGroup, usize) -> usize,
}

impl<F> Clone for CrossedProduct<'_, F> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<F> Copy for CrossedProduct<'_, F> {}

fn same_shape<F: Scalar>(a: &Object<F>, b: &Object<F>) -> bool {
    a.dim() == b.dim() && a.grades() == b.grades()
}

impl<'a, F: Scalar> CrossedProduct<'a, F> {
    pub fn new(cat: &'a ConcreteCategory<F>, frob: &'a FrobeniusAlgebra<F>) -> Self {
        CrossedProduct {
            cat,
            frob,
            action_index: |g, x| g.inv(x),
        }
    }

    pub fn gamma(&self) -> &Object<F> {
        &self.frob.object
    }

    fn n(&self) -> usize {
        self.frob.dim()
    }

    /// ι(f) = ε⊗f.
    pub fn iota(&self, f: &Matrix<F>, x: &Object<F>, y: &Object<F>) -> ExtMorphism<F> {
        ExtMorphism {
            source: x.clone(),
            target: y.clone(),
            s: self.frob.epsilon.to_dense().kron(f),
        }
    }

    /// (X, p) after checking that p: Γ⊗X → X is a morphism with p ∘̂ p = p.
    pub fn ext_object(&self, base: &Object<F>, p: Matrix<F>, label: impl Into<String>) -> Result<ExtObject<F>> {
        let n = self.n();
        if p.shape() != (base.dim(), n * base.dim()) {
            return Err(Error::Shape(alloc::format!("idempotent of shape {:?} on {}", p.shape(), base.label())));
        }
        let tol = self.cat.tol();
        let gx = self.cat.tensor(self.gamma(), base);
        let r = self.cat.morphism_residual(&gx, base, &p);
        if (F::EXACT && r != 0.0) || r > tol {
            return Err(Error::NotAMorphism(alloc::format!("Γ⊗{} → {}", base.label(), base.label()), r));
        }
        let x = ExtObject {
            base: base.clone(),
            p,
            label: label.into(),
        };
        let r = self.idempotent_residual(&x);
        if (F::EXACT && r != 0.0) || r > tol {
            return Err(Error::NotIdempotent(r));
        }
        Ok(x)
    }

    pub fn identity(&self, x: &Object<F>) -> ExtMorphism<F> {
        self.iota(&Matrix::identity(x.dim()), x, x)
    }

    pub fn iota_object(&self, x: &Object<F>) -> ExtObject<F> {
        ExtObject {
            base: x.clone(),
            p: self.identity(x).s,
            label: String::from(x.label()),
        }
    }

    /// t ∘̂ s on carriers, with s: Γ⊗X → Y.
    pub fn compose_raw(&self, t: &Matrix<F>, s: &Matrix<F>) -> Matrix<F> {
        let n = self.n();
        let x = s.cols() / n;
        let lifted = Sparse::from_dense(s).embed(n, 1);
        t.mul_sparse(&lifted).mul_sparse(&self.frob.delta.embed(1, x))
    }

    pub fn compose(&self, t: &ExtMorphism<F>, s: &ExtMorphism<F>) -> Result<ExtMorphism<F>> {
        if !same_shape(&s.target, &t.source) {
            return Err(Error::EndpointMismatch(alloc::format!("{} vs {}", s.target.label(), t.source.label())));
        }
        Ok(ExtMorphism {
            source: s.source.clone(),
            target: t.target.clone(),
            s: self.compose_raw(&t.s, &s.s),
        })
    }

    /// (1_Γ⊗c_{Γ,X}⊗1_Z) ∘ (Δ⊗1_X⊗1_Z): Γ⊗X⊗Z → Γ⊗X⊗Γ⊗Z.
    fn tensor_prefix(&self, x: &Object<F>, z: usize) -> Sparse<F> {
        let n = self.n();
        let c = self.cat.braiding_sparse(self.gamma(), x).embed(n, z);
        c.mul(&self.frob.delta.embed(1, x.dim() * z))
    }

    pub fn tensor(&self, s: &ExtMorphism<F>, t: &ExtMorphism<F>) -> ExtMorphism<F> {
        let prefix = self.tensor_prefix(&s.source, t.source.dim());
        ExtMorphism {
            source: self.cat.tensor(&s.source, &t.source),
            target: self.cat.tensor(&s.target, &t.target),
            s: s.s.kron(&t.s).mul_sparse(&prefix),
        }
    }

    /// γ_g(s) = s ∘ (g⁻¹⊗1_X).
    pub fn act(&self, g: usize, s: &ExtMorphism<F>) -> ExtMorphism<F> {
        let gi = (self.action_index)(&self.frob.group, g);
        ExtMorphism {
            source: s.source.clone(),
            target: s.target.clone(),
            s: s.s.mul_sparse(&self.frob.automorphisms[gi].embed(1, s.source.dim())),
        }
    }

    pub fn act_object(&self, g: usize, x: &ExtObject<F>) -> ExtObject<F> {
        ExtObject {
            base: x.base.clone(),
            p: self.act(g, &x.idempotent()).s,
            label: alloc::format!("γ{}({})", self.frob.group.name(g), x.label),
        }
    }

    pub fn tensor_object(&self, x: &ExtObject<F>, y: &ExtObject<F>) -> ExtObject<F> {
        let p = self.tensor(&x.idempotent(), &y.idempotent());
        ExtObject {
            base: p.source,
            p: p.s,
            label: alloc::format!("{}⊗{}", x.label, y.label),
        }
    }

    /// Basis of Hom_{C⋊₀S}(X, Y) = Hom_C(Γ⊗X, Y).
    pub fn hom(&self, x: &Object<F>, y: &Object<F>) -> Vec<ExtMorphism<F>> {
        let gx = self.cat.tensor(self.gamma(), x);
        self.cat
            .hom_basis(&gx, y)
            .into_iter()
            .map(|s| ExtMorphism {
                source: x.clone(),
                target: y.clone(),
                s,
            })
            .collect()
    }

    /// Basis of Hom_{C⋊S}((X,p), (Y,q)) = q ∘̂ Hom ∘̂ p.
    pub fn compressed_hom(&self, x: &ExtObject<F>, y: &ExtObject<F>) -> Vec<Matrix<F>> {
        let tol = self.cat.tol();
        let images: Vec<Vec<F>> = self
            .hom(&x.base, &y.base)
            .iter()
            .map(|s| self.compose_raw(&y.p, &self.compose_raw(&s.s, &x.p)).into_data())
            .collect();
        let keep = crate::linalg::independent_subset(&images, tol);
        let (r, c) = (y.base.dim(), self.n() * x.base.dim());
        keep.into_iter().map(|i| Matrix::from_vec(r, c, images[i].clone())).collect()
    }

    pub fn hom_dim(&self, x: &ExtObject<F>, y: &ExtObject<F>) -> usize {
        self.compressed_hom(x, y).len()
    }

    /// ‖p ∘̂ p − p‖.
    pub fn idempotent_residual(&self, x: &ExtObject<F>) -> f64 {
        self.compose_raw(&x.p, &x.p).residual(&x.p)
    }

    /// d(X, p) = Tr_X(p ∘ (η⊗1_X)).
    pub fn dim(&self, x: &ExtObject<F>) -> F {
        let lifted = x.p.mul_sparse(&self.frob.eta.embed(1, x.base.dim()));
        self.cat.trace(&lifted, &x.base)
    }

    /// End_{C⋊S}(x) as an algebra under ∘̂, with its basis of carriers.
    pub fn end_algebra(&self, x: &ExtObject<F>) -> Result<(AlgebraPresentation<F>, Vec<Matrix<F>>)> {
        let tol = self.cat.tol();
        let basis = self.compressed_hom(x, x);
        let flat: Vec<Vec<F>> = basis.iter().map(|b| b.clone().into_data()).collect();
        let ambient = x.p.rows() * x.p.cols();
        let space = Subspace::new(flat, ambient, tol)?;
        let unit = space.coords(x.p.data());
        let k = basis.len();
        let products: Vec<Vec<Vec<F>>> = (0..k)
            .map(|a| (0..k).map(|b| space.coords(self.compose_raw(&basis[a], &basis[b]).data())).collect())
            .collect();
        let alg = AlgebraPresentation::from_products(k, unit, |a, b| products[a][b].clone(), tol)?;
        Ok((alg, basis))
    }

    /// Simple summands of x with multiplicities: one minimal idempotent per block.
    pub fn decompose<R: Rng>(&self, x: &ExtObject<F>, rng: &mut R) -> Result<Vec<(ExtObject<F>, usize)>> {
        let (alg, basis) = self.end_algebra(x)?;
        let split = split_idempotents(&alg, SplitOptions::new(self.cat.tol(), self.cat.field_order()), rng)?;
        let combine = |coords: &[F]| {
            let mut m = Matrix::zeros(x.p.rows(), x.p.cols());
            for (c, b) in coords.iter().zip(&basis) {
                if !c.is_zero() {
                    m.axpy(c, b);
                }
            }
            m
        };
        Ok(split
            .blocks
            .iter()
            .map(|block| {
                (
                    ExtObject {
                        base: x.base.clone(),
                        p: combine(&block.minimal[0]),
                        label: x.label.clone(),
                    },
                    block.size,
                )
            })
            .collect())
    }

    /// Central idempotents of End(x) as carriers, with block sizes.
    pub fn central_blocks<R: Rng>(&self, x: &ExtObject<F>, rng: &mut R) -> Result<Vec<(Matrix<F>, Vec<Matrix<F>>)>> {
        let (alg, basis) = self.end_algebra(x)?;
        let split = split_idempotents(&alg, SplitOptions::new(self.cat.tol(), self.cat.field_order()), rng)?;
        let combine = |coords: &[F]| {
            let mut m = Matrix::zeros(x.p.rows(), x.p.cols());
            for (c, b) in coords.iter().zip(&basis) {
                if !c.is_zero() {
                    m.axpy(c, b);
                }
            }
            m
        };
        Ok(split.blocks.iter().map(|b| (combine(&b.central), b.minimal.iter().map(|e| combine(e)).collect())).collect())
    }

    /// M̃ = c_{Γ,X}⁻¹ ∘ c_{X,Γ}⁻¹ on Γ⊗X.
    pub fn inverse_monodromy(&self, x: &Object<F>) -> Sparse<F> {
        let g = self.gamma();
        self.cat.inverse_braiding_sparse(g, x).mul(&self.cat.inverse_braiding_sparse(x, g))
    }
}

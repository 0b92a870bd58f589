//! Galois extensions C⋊S of finite braided fusion categories by Tannakian
//! subcategories S ≅ Rep(G).
//!
//! The ambient category is realized concretely: objects are graded vector spaces with a
//! compatible group action, morphisms are matrices, and every structure map (tensor,
//! braiding, duality, trace) is an explicit matrix. On top of that sit the regular
//! Frobenius algebra Γ of S, the crossed product category with morphisms
//! Hom(Γ⊗X, Y), its idempotent completion, the G-grading, the G-action, the crossed
//! braiding and the spectrum.
//!
//! All computations are generic over [`scalar::Scalar`]: exact cyclotomic arithmetic or
//! complex floating point with an explicit tolerance.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod category;
pub mod crossprod;
pub mod error;
pub mod frobenius;
pub mod generators;
pub mod group;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{ComplexFloat, Cyclotomic, Rational, Scalar};

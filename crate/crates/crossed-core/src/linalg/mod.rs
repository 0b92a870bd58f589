//! Dense and sparse matrices over a [`Scalar`](crate::scalar::Scalar), spectra, and
//! splitting of semisimple algebras.

mod algebra;
mod eigen;
mod matrix;
mod sparse;

pub use algebra::{split_idempotents, AlgebraPresentation, Block, Decomposition, SplitOptions};
pub use eigen::{cluster, eigenvalues, exact_roots, poly_roots};
pub use matrix::{independent_subset, Matrix, Subspace};
pub use sparse::Sparse;

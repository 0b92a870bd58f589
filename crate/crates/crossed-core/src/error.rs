use alloc::string::String;

/// Errors raised while constructing or manipulating categories.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("invalid category data: {0}")]
    InvalidCategory(String),
    #[error("not a morphism {0} (residual {1:.3e})")]
    NotAMorphism(String, f64),
    #[error("unknown simple object `{0}`")]
    UnknownLabel(String),
    #[error("subcategory is not symmetric: monodromy of {0} with {1} is not the identity")]
    NotSymmetric(String, String),
    #[error("subcategory has a nontrivial twist on {0}")]
    NonTrivialTwist(String),
    #[error("dimension of {0} is not a positive integer")]
    NonIntegralDimension(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("value not representable in the chosen field: {0}")]
    FieldTooSmall(String),
    #[error("exact idempotent splitting failed: {0}")]
    ExactSplitUnsupported(String),
    #[error("idempotent residual {0:.3e} exceeds tolerance")]
    NonIdempotentResidual(f64),
    #[error("algebra presentation is inconsistent: {0}")]
    BadAlgebra(String),
    #[error("not an idempotent (residual {0:.3e})")]
    NotIdempotent(f64),
    #[error("grade matrix matches no automorphism (best residual {0:.3e})")]
    NoMatchingAutomorphism(f64),
    #[error("object is not homogeneous (residual {0:.3e})")]
    Inhomogeneous(f64),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("found {found} automorphisms of the regular algebra, expected {expected}")]
    AutomorphismCount { found: usize, expected: usize },
    #[error("Frobenius algebra law fails: {0}")]
    FrobeniusLaw(String),
    #[error("not invertible: {0}")]
    Singular(String),
}

pub type Result<T> = core::result::Result<T, Error>;

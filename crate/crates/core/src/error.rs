use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: sqrt({0}) mixed with sqrt({1})")]
    FieldMismatch(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("matrix is singular")]
    Singular,
    #[error("not a member of {group}: {reason}")]
    NotMember { group: String, reason: String },
    #[error("not in the Lie algebra of {0}")]
    NotInLieAlgebra(String),
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("operator has a non-integer eigenvalue or is not diagonalizable")]
    NonIntegralGrading,
    #[error("invalid inertial data: {0}")]
    InvalidInertia(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("invalid twist: {0}")]
    InvalidTwist(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

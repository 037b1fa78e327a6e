use thiserror::Error;

/// Errors produced by exact-arithmetic and form-validation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no unit normalization")]
    ZeroPolynomial,
    #[error("fraction denominator is zero")]
    ZeroDenominator,
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("basis change matrix has non-unit determinant")]
    NonUnitDeterminant,
    #[error("Seifert matrix has odd size {0}")]
    OddSize(usize),
    #[error("det(V - V^T) = {0}, expected 1")]
    NotUnimodularIntersection(String),
    #[error("boundary system block pattern violated at row {row}, column {col}")]
    BadBlockPattern { row: usize, col: usize },
    #[error("clasp sign must be +1 or -1, got {0}")]
    BadClaspSign(i64),
    #[error("a parallel link needs at least one copy")]
    EmptyLink,
    #[error("torsion block is degenerate: det(tV - V^T) = 0")]
    DegenerateTorsionBlock,
    #[error("presentation matrix is singular")]
    SingularPresentation,
}

pub type Result<T> = std::result::Result<T, Error>;

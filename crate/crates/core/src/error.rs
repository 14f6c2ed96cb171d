use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual subsystems so callers can match on them directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation not supported over this scalar ring: {0}")]
    UnsupportedRing(String),
    #[error("checkerboard zero pattern violated at ({0}, {1})")]
    PatternViolation(usize, usize),
    #[error("size must be even, got {0}")]
    OddSize(usize),
    #[error("size must be odd, got {0}")]
    EvenSize(usize),
    #[error("size must be divisible by 4, got {0}")]
    BadSize(usize),
    #[error("elementary divisors violate the skew-symmetric pairing condition")]
    PairingViolation,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("characteristic polynomial has irreducible factors without Gaussian-rational roots")]
    UnsupportedEigenvalues,
    #[error("point is not a member of the nilpotent variety")]
    NotAMember,
    #[error("segment {0} is not a member of V* (nonzero coordinates, nilpotent)")]
    SegmentNotInVStar(usize),
    #[error("continued-fraction denominator vanished at coordinate {0}")]
    DenominatorVanishes(usize),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("coordinate {0} is not rational")]
    NonRationalCoordinate(usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("lex basis is not in shape position")]
    NotShapePosition,
    #[error("solver budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

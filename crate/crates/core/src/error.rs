use thiserror::Error;

/// Errors raised by the construction, verification and analysis routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is reducible")]
    Reducible,
    #[error("primitive polynomial required")]
    PrimitiveRequired,
    #[error("zero is neither a residue nor a non-residue")]
    ZeroResidue,
    #[error("operation requires an odd prime")]
    EvenPrime,
    #[error("operation requires p = 2")]
    OddPrime,
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(usize, usize),
    #[error("matrix must have dimension at least 1")]
    EmptyMatrix,
    #[error("rows have inconsistent lengths")]
    Ragged,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("no unit entry on the diagonal")]
    NoUnitDiagonal,
    #[error("determinant is not a quadratic residue; not congruent to the identity")]
    NonResidueDeterminant,
    #[error("degree {0} is above the supported limit {1}")]
    DegreeTooLarge(usize, usize),
    #[error("search space {0}^{1} exceeds the enumeration limit")]
    EnumerationTooLarge(u64, usize),
    #[error("value {0} does not fit the integer range")]
    Overflow(String),
    #[error("no suitable {0} found")]
    NotFound(String),
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} too large for dense simulation")]
    DimensionTooLarge(usize),
    #[error("set has {0} matrices, expected {1}")]
    IncompleteSet(usize, usize),
    #[error("invalid basis label: {0}")]
    InvalidLabel(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

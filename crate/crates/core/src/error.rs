use thiserror::Error;

/// Errors reported by every operation in this crate.
///
/// All arithmetic is exact over `i64`; anything that would wrap is reported
/// as [`Error::Overflow`] instead of silently truncating.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("vectors {i} and {j} are not orthogonal (dot product {dot})")]
    NotOrthogonal { i: usize, j: usize, dot: i64 },
    #[error("vector {index} has squared norm {got}, expected {expected}")]
    NormMismatch {
        index: usize,
        expected: i64,
        got: i64,
    },
    #[error("{count} vectors exceed the dimension {dim}")]
    CardinalityExceedsDimension { count: usize, dim: usize },
    #[error("zero vectors admit no equal-norm orthogonal extension")]
    ZeroVector,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of zero and zero is undefined")]
    BothZero,
    #[error("{value} is not divisible by {divisor}")]
    NotDivisible { value: i64, divisor: i64 },
    #[error("squared norm {n_squared} is not a perfect square")]
    NotPerfectSquareNorm { n_squared: i64 },
    #[error("coordinates share the common factor {gcd}; input must be primitive")]
    NotPrimitive { gcd: i64 },
    #[error("expected {expected} vectors, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("vector {index} is not divisible by {divisor}")]
    VectorNotDivisible { index: usize, divisor: i64 },
    #[error("squared norm {n_squared} does not match the required product {required}")]
    NormProductMismatch { n_squared: i64, required: i64 },
    #[error("bit vector has odd weight")]
    OddWeight,
    #[error("bit vector length mismatch: {a} vs {b}")]
    BitLengthMismatch { a: usize, b: usize },
    #[error("the two index vectors must be distinct")]
    EqualIndexVectors,
    #[error("index vectors {u:?} and {v:?} violate the orthogonality condition")]
    InvalidFamilyPair { u: String, v: String },
    #[error("element has no nonzero coordinate")]
    ZeroElement,
    #[error("n = {n} outside the supported range {min}..={max}")]
    UnsupportedSize { n: usize, min: usize, max: usize },
    #[error("dimension {dim} not supported by this construction")]
    UnsupportedDimension { dim: usize },
    #[error("search budget exceeded: requested {requested}, budget {budget}")]
    BudgetExceeded { requested: i64, budget: i64 },
    #[error("no representation of {n} as a sum of {d} squares")]
    NoRepresentation { n: i64, d: usize },
    #[error("squared norm must be nonnegative, got {n}")]
    NegativeNorm { n: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

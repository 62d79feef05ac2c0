//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::field::FieldSpec;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while constructing or evaluating a
/// configuration. All arithmetic itself is exact and total; errors only
/// arise from invalid inputs or guarded resource limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The ground field must have characteristic ≠ 2.
    #[error("characteristic 2 is not supported (modulus {0})")]
    CharacteristicTwo(u64),

    /// Prime fields require a prime modulus.
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    /// Two scalars from different fields met in one operation.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    /// A projective point needs at least one nonzero coordinate.
    #[error("zero vector does not represent a projective point")]
    ZeroVector,

    /// Dimension or field mismatch between points of one predicate.
    #[error("mismatched operands: {0}")]
    Mismatch(String),

    /// A matrix or vector had the wrong shape for the operation.
    #[error("shape error: {0}")]
    Shape(String),

    /// A line needs two projectively distinct spanning points.
    #[error("degenerate span: the two points coincide projectively")]
    DegenerateSpan,

    #[error("points are not collinear")]
    NotCollinear,

    #[error("points must be pairwise projectively distinct")]
    DuplicatePoint,

    /// Bilinear form matrices must be symmetric.
    #[error("matrix is not symmetric at entry ({0}, {1})")]
    NotSymmetric(usize, usize),

    /// Exhaustive degeneracy testing only works over finite fields.
    #[error("unsupported mode: exhaustive enumeration requires a finite field")]
    UnsupportedMode,

    /// Brute-force line enumeration only works over finite fields.
    #[error("unsupported field: operation requires a finite field")]
    UnsupportedField,

    /// The constructive sampler gave up.
    #[error("retry budget exceeded after {attempts} attempts (seed {seed})")]
    RetryBudgetExceeded { attempts: u32, seed: u64 },

    /// The requested exhaustive scan is too large to run.
    #[error("scan too large: estimated {required} checks exceeds budget {limit}")]
    ScanTooLarge { required: u128, limit: u128 },

    /// The altitude demonstration needs a non-degenerate triangle.
    #[error("degenerate triangle: the three vertices are collinear")]
    DegenerateTriangle,

    /// A point circle (radius² = 0) was rejected; pass the allow-degenerate
    /// flag to accept it.
    #[error("radius squared must be nonzero (use allow-degenerate to permit a point circle)")]
    ZeroRadius,

    /// Malformed textual input (scalar strings, config files, CLI flags).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that indicate invalid input rather than an internal
    /// arithmetic problem; the CLI maps these to exit code 1.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::RetryBudgetExceeded { .. })
    }
}

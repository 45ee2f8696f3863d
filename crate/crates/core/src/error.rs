use thiserror::Error;

use crate::kappa::{Orientation, SplitScalar};
use crate::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse coefficient `{input}`")]
pub struct ParseCoeffError {
    pub input: String,
}

impl ParseCoeffError {
    pub(crate) fn new(input: &str) -> Self {
        Self { input: input.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {dim} outside supported range {min}..={max}")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },
    #[error("grade {grade} exceeds dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("blade mask {mask:#b} does not fit in dimension {dim}")]
    MaskOutOfRange { mask: u32, dim: usize },
    #[error("generator index {index} does not exist in dimension {dim}")]
    GeneratorOutOfRange { index: usize, dim: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KappaError {
    #[error("orientation mismatch: {left} vs {right}")]
    OrientationMismatch { left: Orientation, right: Orientation },
    #[error("expected a Cl(4,0) multivector, got dimension {0}")]
    NotCl40(usize),
    #[error("multivector has component {coeff} on blade {mask:#06b}, outside the even subalgebra")]
    OutsideSpan { mask: u32, coeff: String },
    #[error("X X\u{2020} has residual {coeff} on basis index {index}; only indices 0 and 7 may be nonzero")]
    QuadraticFormResidual { index: usize, coeff: String },
    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("sampler produced only degenerate draws after {0} attempts")]
    DegenerateSample(usize),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// Definition-(b) norm is undefined: `X X†` has a nonzero ε part.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("X X\u{2020} = {} + ({}) \u{03b5} is not a scalar", .value.s.format_coeff(), .value.p.format_coeff())]
pub struct SplitResidual<F: Field> {
    pub value: SplitScalar<F>,
}

#[derive(Debug, Error)]
pub enum ElementParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("expected 8 coefficients, got {0}")]
    CoeffCount(usize),
    #[error("lambda must be 1 or -1, got {0}")]
    Lambda(i64),
    #[error("coefficient {index}: {source}")]
    Coeff {
        index: usize,
        #[source]
        source: ParseCoeffError,
    },
    #[error("coefficient {0} must be a string or number")]
    CoeffType(usize),
}

impl From<serde_json::Error> for ElementParseError {
    fn from(e: serde_json::Error) -> Self {
        ElementParseError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

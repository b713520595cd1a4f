use thiserror::Error;

/// Errors produced by knot-vector validation and the spline operations.
///
/// Positions are reported as `f64` regardless of the working scalar.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplineError {
    #[error("interior knot {position} has multiplicity {multiplicity}, which exceeds the maximum {max_allowed} for degree {degree}")]
    MultiplicityTooLarge {
        position: f64,
        multiplicity: usize,
        degree: usize,
        max_allowed: usize,
    },

    #[error("interior knot {position} lies outside the open interval (0, 1)")]
    KnotOutOfRange { position: f64 },

    #[error("interior knot {position} has zero multiplicity")]
    ZeroMultiplicity { position: f64 },

    #[error("interior knot positions must be strictly increasing (saw {previous} then {current})")]
    KnotsNotIncreasing { previous: f64, current: f64 },

    #[error("parameter t = {t} lies outside [0, 1]")]
    ParameterOutOfRange { t: f64 },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("coefficient count {got} does not match space dimension {expected}")]
    CoefficientCount { got: usize, expected: usize },

    #[error("control points must all have the same dimension")]
    PointDimensionMismatch,

    #[error("knot vectors refer to different spaces: {detail}")]
    KnotVectorMismatch { detail: String },

    #[error("target knot vector is not a refinement of the source (knot {position} short by {missing} occurrences)")]
    NotARefinement { position: f64, missing: usize },

    #[error("knot vector to keep is not a sub-multiset of the curve's knots (knot {position} in excess)")]
    NotASubset { position: f64 },

    #[error("target degree {target} must be lower than the curve degree {current}")]
    TargetDegreeNotBelow { target: usize, current: usize },

    #[error("target degree {target} exceeds the curve degree {current}")]
    TargetDegreeAbove { target: usize, current: usize },

    #[error("duplicate knot {position}")]
    DuplicateKnot { position: f64 },

    #[error("operation requires simple interior knots (knot {position} has multiplicity {multiplicity})")]
    MultipleInteriorKnots { position: f64, multiplicity: usize },

    #[error("evaluation point {point} is inadmissible: {detail}")]
    InadmissiblePoint { point: f64, detail: String },

    #[error("division by zero in a terminating hypergeometric sum (term {term})")]
    HypergeometricPole { term: usize },

    #[error(
        "near-degenerate extension: |denominator| = {denominator:e} below the guard {guard:e}"
    )]
    DegenerateExtension { denominator: f64, guard: f64 },

    #[error("ill-conditioned basis: smallest norm {smallest:e} below {guard:e} of the largest {largest:e}")]
    IllConditioned {
        smallest: f64,
        largest: f64,
        guard: f64,
    },

    #[error("rank-deficient orthogonality system: null space is not one-dimensional")]
    RankDeficient,
}

impl SplineError {
    /// True for failures of numerical conditioning rather than input validation.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            SplineError::DegenerateExtension { .. }
                | SplineError::IllConditioned { .. }
                | SplineError::RankDeficient
                | SplineError::HypergeometricPole { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, SplineError>;

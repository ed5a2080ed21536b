use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("halfspace system is infeasible")]
    EmptyPolytope,
    #[error("halfspace system defines an unbounded set")]
    Unbounded,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program objective is unbounded")]
    UnboundedObjective,
    #[error("ray origin lies outside the polytope")]
    OriginOutside,
    #[error("zero direction or normal")]
    ZeroVector,
    #[error("empty input")]
    EmptyInput,

    #[error("unit ball is not centrally symmetric")]
    NotSymmetric,
    #[error("unit ball is not full-dimensional")]
    NotFullDimensional,
    #[error("origin is not interior to the unit ball")]
    OriginNotInterior,
    #[error("unknown norm name {0:?}")]
    UnknownNorm(String),
    #[error("unit sphere contains no segment")]
    NoSegmentOnSphere,

    #[error("point set is a singleton")]
    DegenerateSingleton,
    #[error("point is not a boundary point of the body")]
    NotBoundary,
    #[error("body is not b-convex")]
    NotBConvex,
    #[error("body is not b-bounded")]
    NotBBounded,
    #[error("point lies inside the ball hull")]
    PointInsideHull,
    #[error("point lies inside the body")]
    PointInsideBody,
    #[error("exposed b-face structure differs across the relative interior of a center-set face")]
    SampleInconsistency,
    #[error("generator set is not contained in the body")]
    SNotInK,
    #[error("direct hull test and face-meeting test disagree")]
    CriterionMismatch,
    #[error("certificate failed re-verification: {0}")]
    CertificateInvalid(String),

    #[error("diameter is {0}, expected exactly 1")]
    DiameterNotOne(String),
    #[error("candidate set is not complete")]
    CNotComplete,
    #[error("convex hull of the input is not contained in the candidate")]
    KNotInC,
    #[error("completion criteria disagree (hull test {hull}, face test {faces})")]
    CriteriaDisagree { hull: bool, faces: bool },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse {0:?} as a rational")]
    ParseRational(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;

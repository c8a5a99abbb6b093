use thiserror::Error;

/// Errors raised by the geometric routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("vector is zero")]
    ZeroVector,
    #[error("linear map is singular")]
    SingularMap,
    #[error("origin is not strictly inside the polygon")]
    OriginNotInterior,
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("polygon has {0} vertices, expected a triangle")]
    NotATriangle(usize),
    #[error("point is not on the boundary of the polygon")]
    NotOnBoundary,
    #[error("polygon is not symmetric about the origin")]
    NotSymmetric,
    #[error("degenerate body: {0}")]
    DegenerateBody(String),
    #[error("linear program failed: {0}")]
    LpFailure(String),
    #[error("unsupported body for this functional: {0}")]
    UnsupportedBody(String),
    #[error("could not generate a valid polygon after {0} attempts")]
    GenerationFailure(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

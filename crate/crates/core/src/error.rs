use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cross ratio is degenerate: two of its arguments coincide")]
    DegenerateCrossRatio,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("point is sent to infinity by the transform")]
    PointAtInfinity,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("point lies on the polygon boundary within tolerance")]
    BoundaryAmbiguous,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("flags are not in general position")]
    NotGeneralPosition,
    #[error("flag tuple is not positive")]
    NotPositive,
    #[error("no affine chart makes the outer polygon bounded")]
    NoBoundedChart,
    #[error("invalid inscribed pair: {0}")]
    InvalidPair(String),
    #[error("point is not strictly inside the domain")]
    PointOutsideDomain,
    #[error("tangent direction is zero")]
    ZeroVector,
    #[error("origin is not interior to the polygon")]
    OriginNotInterior,
    #[error("tolerance not reached: best estimate {value} with error {error_estimate}")]
    ToleranceNotReached {
        value: f64,
        error_estimate: f64,
        node_count: usize,
    },
    #[error("integrand returned a non-finite value at ({x}, {y})")]
    NonFiniteIntegrand { x: f64, y: f64 },
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("expected {expected} triple ratios, got {found}")]
    LengthMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

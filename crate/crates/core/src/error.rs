//! Crate-level error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("segment {segment}: end used {count} times as {kind} (expected exactly once)")]
    DanglingEnd { segment: u32, kind: &'static str, count: usize },

    #[error("crossing {crossing}: rotation inconsistent with roles: {detail}")]
    RotationInconsistent { crossing: usize, detail: String },

    #[error("face trace gives Euler characteristic {chi}, expected 2 (non-planar or disconnected data)")]
    EulerCheckFailed { chi: i64 },

    #[error("region {0} unreachable from the base region")]
    UnreachableRegion(usize),

    #[error("matrix is not in SL(2,C): |det - 1| = {0:.3e}")]
    NotSl2(f64),

    #[error("Wirtinger relation violated at crossing {crossing}: residual {residual:.3e}")]
    RelationViolated { crossing: usize, residual: f64 },

    #[error("chosen line is not invariant for component {component}: residual {residual:.3e}")]
    LineNotInvariant { component: u32, residual: f64 },

    #[error("component {0} has central meridian image; an explicit decoration line is required")]
    CentralMeridian(u32),

    #[error("decoration fails to close up around component {component}: residual {residual:.3e}")]
    DecorationClosure { component: u32, residual: f64 },

    #[error("shadow monodromy failure across segment {segment}: residual {residual:.3e}")]
    MonodromyFailure { segment: u32, residual: f64 },

    #[error("inadmissible coloring: {0}")]
    Inadmissible(String),

    #[error("degenerate crossing {crossing}: factor {factor} vanishes")]
    DegenerateCrossing { crossing: usize, factor: String },

    #[error("octahedral coloring invalid at crossing {crossing}: {relation} residual {residual:.3e}")]
    OctahedralInvalid { crossing: usize, relation: String, residual: f64 },

    #[error("groupoid relation {relation} fails at crossing {crossing}: residual {residual:.3e}")]
    GroupoidRelation { crossing: usize, relation: String, residual: f64 },

    #[error("Hopf map at infinity: representative has zero second component")]
    HopfAtInfinity,

    #[error("matrix is not invertible for this operation: {0}")]
    NotInvertible(String),

    #[error("matrix does not conjugate into around-form: residual {0:.3e}")]
    OffPattern(f64),

    #[error("gauge search failed after {tries} tries: {goal}")]
    GaugeSearchFailed { goal: String, tries: usize },

    #[error("pinched crossing {0}: unit-circle avoidance impossible (z_W = 1)")]
    PinchedUnfixable(usize),

    #[error("potential evaluated at a non-analytic point: argument {argument} within {distance:.3e} of an integer")]
    NonAnalytic { argument: String, distance: f64 },

    #[error("critical-point solve failed: {0}")]
    SolveFailed(String),

    #[error("singular Jacobian in Newton solve: {0}")]
    SingularJacobian(String),

    #[error("pinched octahedral coloring: {0}")]
    Pinched(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

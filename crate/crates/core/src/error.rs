use thiserror::Error;

/// Errors raised by series construction, operators, samplers and checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QdiscError {
    #[error("series coefficients are not normalized: expected a0 = 0 and a1 = 1, got a0 = {a0}, a1 = {a1}")]
    NormalizationViolation { a0: String, a1: String },

    #[error("coefficient at power {index} is not finite")]
    NonfiniteCoefficient { index: usize },

    #[error("a power series needs at least one coefficient")]
    EmptySeries,

    #[error("point {point} lies outside the open unit disc")]
    PointOutsideDisc { point: String },

    #[error("radius {0} is outside (0, 1)")]
    RadiusOutOfRange(f64),

    #[error("series must be normalized (f(0) = 0, f'(0) = 1)")]
    NotNormalized,

    #[error("zeta = {0} is outside the closed unit disc")]
    ZetaOutOfRange(String),

    #[error("q = {0} is outside [0, 1)")]
    QOutOfRange(f64),

    #[error("alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),

    #[error("bracket index must be at least 1")]
    BracketIndex,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid is empty")]
    EmptyGrid,

    #[error("every grid point hit a vanishing denominator")]
    AllPointsSingular,

    #[error("denominator vanishes at {point}")]
    DenominatorSingular { point: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("`{0}` is not declared convex")]
    NotConvexInput(String),

    #[error("`{id}` is not declared {expected}")]
    MembershipMismatch { id: String, expected: &'static str },

    #[error("angles a = {a}, b = {b} are outside the admissible range")]
    AngleOutOfRange { a: f64, b: f64 },

    #[error("zeta = 1 is not admissible here (the bound divides by 1 - zeta)")]
    ZetaEqualsOne,

    #[error("zeta = {0} lies on the unit circle; an interior value is required")]
    ZetaOnBoundary(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, QdiscError>;

impl From<std::io::Error> for QdiscError {
    fn from(err: std::io::Error) -> Self {
        QdiscError::Io(err.to_string())
    }
}

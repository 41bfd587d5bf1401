use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation mismatch: (wmax {0}, qmax {1}) vs (wmax {2}, qmax {3})")]
    TruncationMismatch(u32, u32, u32, u32),

    #[error("series is not a unit: the weight-0 constant term is zero")]
    NotAUnit,

    #[error("exp needs a series with no weight-0 part")]
    ExpDomain,

    #[error("log needs a series whose weight-0 part is exactly 1")]
    LogDomain,

    #[error("invalid substitution for {var}: {reason}")]
    Substitution { var: String, reason: String },

    #[error("coefficient index out of range: weight {weight} (wmax {wmax}), y^{q} (qmax {qmax})")]
    OutOfRange {
        weight: u32,
        q: u32,
        wmax: u32,
        qmax: u32,
    },

    #[error("truncation deficit: need input wmax >= {needed}, have {have}")]
    TruncationDeficit { needed: u32, have: u32 },

    #[error("unsupported oracle: {0}")]
    UnsupportedOracle(String),

    #[error("invalid fibration spec: {0}")]
    InvalidSpec(String),

    #[error("missing Hadamard coefficients: need {needed}, have {have}")]
    MissingCoefficients { needed: u32, have: u32 },

    #[error("class is not homogeneous of weight {expected} without y")]
    NonHomogeneous { expected: u32 },

    #[error("missing intersection number for monomial {0}")]
    MissingIntersectionNumber(String),

    #[error("y-degree {q} exceeds the fibration dimension {max}")]
    DegreeOutOfRange { q: u32, max: u32 },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("routes disagree for chi_{q}: generating series gives {series_route}, P-sum gives {psum_route}")]
    RouteMismatch {
        q: u32,
        series_route: String,
        psum_route: String,
    },

    #[error("chi_{q} = {value} is not an integer")]
    NonIntegral { q: u32, value: String },

    #[error("invalid base: {0}")]
    InvalidBase(String),
}

pub type Result<T> = std::result::Result<T, Error>;

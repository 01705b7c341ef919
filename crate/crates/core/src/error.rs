use thiserror::Error;

/// Errors produced by the symbol calculus, the enumerators and the renderers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol is not normalized: {0}")]
    NotNormalized(String),

    #[error("parity violation: symbol has {odd} odd and {even} even entries, expected exactly two odd")]
    ParityViolation { odd: usize, even: usize },

    #[error("dilation factor must be nonzero")]
    ZeroDilation,

    #[error("circle radius must be strictly positive")]
    NonPositiveRadius,

    #[error("line normal must be nonzero")]
    ZeroNormal,

    #[error("line normal length is irrational, symbol cannot be normalized over the rationals")]
    IrrationalNormal,

    #[error("matrix determinant is {0}, expected 1")]
    Determinant(String),

    #[error("curvature must be nonnegative, got {0}")]
    NegativeCurvature(i64),

    #[error("curvature must be at least 1, got {0}")]
    CurvatureTooSmall(i64),

    #[error("curvature {0} is not permitted in the disk model (n must be odd or divisible by 4)")]
    CurvatureNotPermitted(i64),

    #[error("empty range: lower bound {lo} is not below upper bound {hi}")]
    EmptyRange { lo: String, hi: String },

    #[error("disk symbol ({p}, {q})/({n}, {n}) does not satisfy n^2 + 4 = p^2 + q^2")]
    NotOnQuadric { p: i64, q: i64, n: i64 },

    #[error("disk symbol ({p}, {q})/({n}, {n}) does not halve to an integral half-plane symbol")]
    HalfIntegral { p: i64, q: i64, n: i64 },

    #[error("parameter {value} is outside the valid range of series {series} (minimum {min})")]
    SeriesRange { series: String, value: i64, min: i64 },

    #[error("index {value} is below the minimum {min}")]
    IndexRange { value: i64, min: i64 },

    #[error("integer {0} does not fit in a machine word")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid render configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, DunklError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DunklError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero root")]
    ZeroRoot,

    #[error("root system is not reduced: roots {0} and {1} are parallel")]
    NotReduced(usize, usize),

    #[error("root system is not closed: reflecting root {target} in root {mirror} leaves R+ ∪ −R+")]
    NotClosed { mirror: usize, target: usize },

    #[error("negative multiplicity {0}")]
    NegativeMultiplicity(String),

    #[error("multiplicity is not constant on orbit {0}")]
    MultiplicityNotOrbitConstant(usize),

    #[error("expected {expected} multiplicities, got {found}")]
    MultiplicityCount { expected: usize, found: usize },

    #[error("unknown root system `{0}`")]
    UnknownSystem(String),

    #[error("nonzero remainder in exact division by {divisor}")]
    NonzeroRemainder { divisor: String },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not k-harmonic")]
    NotHarmonic,

    #[error("vanishing Pochhammer denominator at j = {0}")]
    VanishingPochhammer(u32),

    #[error("Maxwell route is degenerate when lambda_k = 0")]
    DegenerateMaxwell,

    #[error("weighted function is not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("odd exponent in sphere oracle multi-index")]
    OddExponent,

    #[error("operation requires the group Z2^d")]
    NotZ2d,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable index x{index} out of range for dimension {dim}")]
    VariableOutOfRange { index: usize, dim: usize },

    #[error("argument {0} outside validated range")]
    OutOfRange(String),

    #[error("series truncation bound not reached within {0} terms")]
    TruncationFailure(usize),

    #[error("quadrature tolerance not reached: {0}")]
    ToleranceNotReached(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl DunklError {
    /// Errors that can only arise from a broken internal invariant rather than
    /// from user input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            DunklError::NonzeroRemainder { .. } | DunklError::NotPolynomial(_)
        )
    }
}

impl From<std::io::Error> for DunklError {
    fn from(e: std::io::Error) -> Self {
        DunklError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for DunklError {
    fn from(e: serde_json::Error) -> Self {
        DunklError::Invalid(e.to_string())
    }
}

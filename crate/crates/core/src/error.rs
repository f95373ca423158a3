use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {n} out of range (must be 1..={cap})")]
    DimensionOutOfRange { n: u32, cap: u32 },

    #[error("vertex index {index} out of range for dimension {n}")]
    VertexOutOfRange { index: usize, n: u32 },

    #[error("invalid subcube specification: {0}")]
    BadSubcubeSpec(String),

    #[error("radius {radius} out of range for dimension {n}")]
    RadiusOutOfRange { radius: u32, n: u32 },

    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("the full cube yields a singular system (infinite exit time)")]
    FullCube,

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    EigenNonConvergence { sweeps: usize },

    #[error("linear solve residual {residual:e} exceeds threshold {threshold:e}")]
    SolveResidual { residual: f64, threshold: f64 },

    #[error("function not supported on the given set: g({vertex}) = {value}")]
    SupportViolation { vertex: usize, value: f64 },

    #[error("the zero function has no defined ratio here")]
    ZeroFunction,

    #[error("value at position {index} is not strictly positive: {value}")]
    NonPositiveValue { index: usize, value: f64 },

    #[error("weights must be nonnegative and sum to 1 (got sum {sum})")]
    BadWeights { sum: f64 },

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("exhaustive search needs budget {required} but only {budget} allowed")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("integer overflow in {0}")]
    Overflow(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

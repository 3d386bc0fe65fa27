use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("block dimension {requested} exceeds matrix dimension {dim}")]
    BlockTooLarge { requested: usize, dim: usize },

    #[error("matrix norm {norm:.3e} exceeds the scaling budget of the exponential")]
    ScalingBudget { norm: f64 },

    #[error("singular denominator in the rational approximant")]
    SingularDenominator,

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("point has chart {found:?}, expected {expected:?}")]
    ChartMismatch {
        expected: crate::chart::Chart,
        found: crate::chart::Chart,
    },

    #[error("point outside chart domain: {0}")]
    ChartDomain(String),

    #[error("displacement truncation budget exceeded: {0}")]
    TruncationBudget(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("fiducial state is not normalized: ||f|| = {norm}")]
    NotNormalized { norm: f64 },

    #[error("weight operator is not a valid density matrix: {0}")]
    NotDensity(String),
}

pub type Result<V> = std::result::Result<V, Error>;

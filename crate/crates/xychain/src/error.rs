//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by operator construction, thermal-state computation,
/// entanglement extraction, and sweep configuration.
#[derive(Debug, Error)]
pub enum Error {
    /// Operator dimension would exceed the 2^12 cap.
    #[error("operator dimension {dim} exceeds the cap of 2^{max_sites} (N <= {max_sites})")]
    DimensionCap { dim: usize, max_sites: usize },

    /// Matrix is not square or its dimension is not a power of two.
    #[error("invalid operator shape: {0}")]
    InvalidShape(String),

    /// Two operators that must act on the same space do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A site index fell outside 1..=N.
    #[error("site {site} out of range 1..={n_sites}")]
    SiteOutOfRange { site: usize, n_sites: usize },

    /// An operation required a Hermitian input.
    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {deviation:.3e}")]
    NotHermitian { deviation: f64 },

    /// Chain parameters violate the model's constraints.
    #[error("invalid chain spec: {0}")]
    InvalidChainSpec(String),

    /// Gibbs states are only defined for T > 0.
    #[error("temperature must be positive, got {0}")]
    NonPositiveTemperature(f64),

    /// Input expected to be a density matrix fails trace/hermiticity checks.
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    /// A 4x4 matrix expected to be X-form has entries off the two diagonals.
    #[error("matrix is not X-form: {0}")]
    NotXForm(String),

    /// X-state parameters violate non-negativity or positivity constraints.
    #[error("invalid X state: {0}")]
    InvalidXState(String),

    /// The closed-form negativity requires a normalized X state.
    #[error("X state is not normalized (a1+a2+a3+a4 = {sum})")]
    UnnormalizedXState { sum: f64 },

    /// Sweep configuration failed validation.
    #[error("invalid sweep config: {0}")]
    InvalidSweepConfig(String),

    /// Peak counting needs at least three samples.
    #[error("peak counting needs at least 3 samples, got {0}")]
    TooFewSamples(usize),

    /// Backend eigensolver failure.
    #[error("eigensolver backend error: {0}")]
    Linalg(#[from] ndarray_linalg::error::LinalgError),

    /// Output file I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

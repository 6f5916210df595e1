use thiserror::Error;

/// Errors raised by the statistics, extraction and generation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignalError {
    #[error("series needs at least 2 samples, got {0}")]
    TooShort(usize),

    #[error("sample {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("series lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("series has zero variance")]
    ZeroVariance,

    /// The measured correlation is zero, so there is no common signal to extract.
    #[error("signals are uncorrelated; no common signal exists")]
    NoCommonSignal,

    #[error("gamma1 = {gamma1} is outside the admissible range [{low}, 1]")]
    OutOfRange { gamma1: f64, low: f64 },

    /// Both backgrounds vanish; every convex combination of the two signals is exact.
    #[error("both background strengths are zero; the optimal combination is not unique")]
    DegenerateModel,

    #[error("linear combination has zero variance")]
    DegenerateCombination,

    /// The pairwise correlations cannot be explained by a single common signal.
    #[error(
        "correlations are not ideal: implied gamma^2 = ({:.6}, {:.6}, {:.6})",
        gammas_sq[0],
        gammas_sq[1],
        gammas_sq[2]
    )]
    NotIdeal { gammas_sq: [f64; 3], sign_consistent: bool },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid scenario: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, SignalError>;

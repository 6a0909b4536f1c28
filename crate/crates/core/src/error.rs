use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} is only supported up to order {max}, got {got}")]
    UnsupportedOrder {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("integral or sum does not converge: {0}")]
    Divergence(String),

    #[error("F(0) = 0: the sequence contains zero")]
    ZeroAtOrigin,

    #[error("n = {n} is outside the region where this formula holds: {reason}")]
    Range { n: i64, reason: String },

    #[error("formula not applicable: {0}")]
    Inapplicable(String),

    #[error("pole at s = {location}")]
    Pole {
        location: Complex64,
        residue: Option<Complex64>,
    },

    #[error("accuracy target not met: {0}")]
    Accuracy(String),

    #[error("Newton refinement failed for zero {index}")]
    Refinement { index: usize },

    #[error("invalid expansion table: {0}")]
    InvalidTable(String),

    #[error("insufficient depth: {0}")]
    InsufficientDepth(String),

    #[error("value at s = 0 is indeterminate: {0}")]
    Indeterminate(String),

    #[error("missing data: {0}")]
    Missing(String),

    #[error("fit failed: {0}")]
    Fit(String),
}

pub type Result<T> = std::result::Result<T, ZetaError>;

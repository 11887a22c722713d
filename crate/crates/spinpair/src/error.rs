use thiserror::Error;

/// Errors produced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("{name} = {value} lies outside [0, pi]")]
    AngleOutOfRange { name: &'static str, value: f64 },

    #[error("not normalized: |norm^2 - 1| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NotNormalized { deviation: f64, tolerance: f64 },

    #[error("state has zero amplitude everywhere")]
    ZeroState,

    #[error("entanglement ratio diverges: q = 0")]
    DegenerateRatio,

    #[error("operation requires a {expected} state")]
    KindMismatch { expected: &'static str },

    #[error("no real equal-weight basis exists (cos alpha < 0)")]
    NoRealSolution,

    #[error("state is disentangled (p = 0 or q = 0)")]
    Disentangled,

    #[error("|component| = {component} exceeds spin = {spin}")]
    SpinDomain { spin: f64, component: f64 },

    #[error("chi-square needs at least 2 categories with expected count >= 5, got {categories}")]
    InsufficientExpected { categories: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

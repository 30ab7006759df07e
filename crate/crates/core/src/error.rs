use thiserror::Error;

/// Errors raised by the grid, decision and inversion routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: need finite lo < hi")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("theta = {theta} lies outside the domain [{lo}, {hi}]")]
    OutOfDomain { theta: f64, lo: f64, hi: f64 },

    #[error("grid mismatch: both functions must share domain and sample count")]
    GridMismatch,

    #[error("no sign change on [{lo}, {hi}]: residuals {f_lo} and {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("membership value {value} at sample {index} is outside [0, 1]")]
    NotAMembership { index: usize, value: f64 },

    #[error("density value {value} at sample {index} is negative")]
    NegativeDensity { index: usize, value: f64 },

    #[error("function integrates to {integral}, not 1 (tolerance {tol})")]
    NotNormalized { integral: f64, tol: f64 },

    #[error("invalid loss parameters: {0}")]
    InvalidLossParams(String),

    #[error("inverse map is singular at theta = {theta}: a1 + a2 (1 - m) = 0")]
    Singularity { theta: f64 },

    #[error("inverse map is not a density: it integrates to {integral}")]
    NotADensity { integral: f64 },

    #[error("b1 = {b1} is infeasible: it must lie in [0, {bound}]")]
    InfeasibleB1 { b1: f64, bound: f64 },

    #[error("r1 = {r1} is infeasible: it must lie in [0, {bound})")]
    InfeasibleR1 { r1: f64, bound: f64 },

    #[error("membership is degenerate: {0}")]
    DegenerateMembership(&'static str),

    #[error("evidence integral is {0}; the posterior is undefined")]
    DegenerateEvidence(f64),

    #[error("invalid likelihood: {0}")]
    InvalidLikelihood(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

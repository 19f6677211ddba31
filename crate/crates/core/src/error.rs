use thiserror::Error;

/// Errors raised by the geometric constructions.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeometryError {
    /// The Euler chart on S³ is degenerate (sin θ too small).
    #[error("Euler chart degenerate: |sin θ| = {sin_theta:.3e}")]
    ChartDegenerate { sin_theta: f64 },
    /// A coframe matrix is not invertible.
    #[error("coframe is singular: |det| = {det:.3e}")]
    SingularCoframe { det: f64 },
    /// A metric matrix is not invertible.
    #[error("metric is singular: |det| = {det:.3e}")]
    SingularMetric { det: f64 },
    /// Fractional powers requested outside the real positive branch.
    #[error("branch restriction: {0}")]
    BranchRestriction(String),
    /// Parameters for which a formula is undefined.
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    /// Parameters violating a structural invariant.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A construction requested for a case that does not exist.
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

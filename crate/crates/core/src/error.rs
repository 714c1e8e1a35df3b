use thiserror::Error;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A point or region falls outside the grid it is evaluated on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Caller violated an API precondition (mismatched grids, bad ranges).
    #[error("usage error: {0}")]
    Usage(String),

    /// A denominator is (numerically) zero, e.g. a field vanishing on an
    /// annulus that is supposed to carry mass.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Coefficients failed the ellipticity/convexity validation.
    #[error("coefficient validation failed: {0}")]
    Validation(String),

    /// The assembled discrete operator is singular or indefinite.
    #[error("singular or indefinite operator: {message} (delta0 = {delta0})")]
    Singular { message: String, delta0: f64 },

    /// Iterative solver ran out of iterations.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    /// Traction data violates the rigid-motion compatibility condition.
    #[error("incompatible traction data: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    Compatibility { defect: f64, tol: f64 },

    /// A cutoff transition (or similar feature) is unresolved on the grid.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// An ODE/linear solve produced non-finite values.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while evaluating a rotational hypersurface.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A point violates a surface guard (|s| margin, normalization sign, cos t degeneracy, ...).
    #[error("domain violation: {0}")]
    Domain(String),

    /// Family-specific parameter or validity constraint violated; names the constraint.
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),

    /// Adaptive quadrature hit the subdivision cap before reaching tolerance.
    /// Carries the best estimate and its error bound.
    #[error("quadrature did not converge: best estimate {best}, error bound {err_bound}")]
    QuadNonConvergence { best: f64, err_bound: f64 },

    /// The metric determinant is numerically zero.
    #[error("degenerate metric: |g| = {0}")]
    DegenerateMetric(f64),

    /// The coordinate-frame Gram matrix is too ill-conditioned to invert.
    #[error("singular coordinate frame: condition estimate {0}")]
    SingularFrame(f64),

    /// Operator order outside the supported set.
    #[error("unsupported operator order k = {0}")]
    UnsupportedK(u32),

    /// The two a_k computation paths disagree beyond tolerance (transcription bug signal).
    #[error("mean-curvature path inconsistency: {0}")]
    Consistency(String),

    /// Neither Newton-transformation sign gauge reproduces the generic operator.
    #[error("newton transformation convention mismatch: {0}")]
    ConventionMismatch(String),

    /// The decomposition system is degenerate (the harmonic cases).
    #[error("indeterminate decomposition: {0}")]
    IndeterminateDecomposition(String),

    /// The profile is not of the flat/minimal family the specialized formula needs.
    #[error("case mismatch: {0}")]
    CaseMismatch(String),

    /// Classification needs more (or more varied) sample points.
    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),

    /// Operation not defined for this axis/configuration.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Command-line usage error.
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors reported by evaluation and verification routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument was outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series hit its term cap before the tail bound met the tolerance.
    #[error("truncation failure: tail bound {tail_bound:e} above tolerance after {terms} terms")]
    Truncation { terms: usize, tail_bound: f64 },

    /// Adaptive quadrature could not reach the requested accuracy.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A combinatorial enumeration would exceed the configured cap.
    #[error("combinatorial size {size:e} exceeds cap {cap:e}")]
    CombinatorialSize { size: f64, cap: f64 },

    /// A computed value was not finite.
    #[error("non-finite result in {0}")]
    NonFinite(String),
}

//! Error vocabulary shared by every module.
//!
//! Non-convergence of a series is deliberately *not* here as a hard failure
//! mode of evaluation: [`crate::series::eval_series`] reports it as state
//! (`converged = false`) so verification campaigns can skip-and-log. The
//! `NotConverged` variant below exists for the layers that must refuse to
//! proceed on an unconverged component (relation instantiation).

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The base q lies outside the open unit disk.
    #[error("base out of domain: |q| = {modulus} (need |q| < 1)")]
    BaseOutOfDomain { modulus: f64 },

    /// A factor (1 - x q^j) or (x + j) that ends up in a denominator
    /// vanishes within the singularity threshold.
    #[error("singular factor at index {index}: |factor| = {magnitude:.3e}")]
    SingularFactor { index: i64, magnitude: f64 },

    /// A series denominator parameter collides with q^(-m) (q kinds) or a
    /// nonpositive integer (classical kinds) within the threshold.
    #[error("singular series denominator: parameter {param} at shift {index}")]
    SingularDenominator { param: String, index: i64 },

    /// A precondition on arguments or domains failed.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// Gamma evaluated at (or within threshold of) a nonpositive integer.
    #[error("gamma pole at {0}")]
    Pole(String),

    /// A closed-form coefficient's denominator vanishes within threshold.
    #[error("singular coefficient {rule}: |denominator| = {magnitude:.3e}")]
    SingularCoefficient { rule: String, magnitude: f64 },

    /// A parameter point violates a named admissibility predicate.
    #[error("constraint violated for {relation}: {predicate}")]
    ConstraintViolated { relation: String, predicate: String },

    /// A component series failed to converge where convergence is mandatory.
    #[error("series did not converge within {max_terms} terms ({context})")]
    NotConverged { max_terms: usize, context: String },

    /// No catalog entry has this id.
    #[error("unknown relation id: {0}")]
    UnknownRelation(String),

    /// The (q id, classical id) pair is not a recorded correspondence.
    #[error("unknown limit pair: {0} / {1}")]
    UnknownPair(String, String),

    /// Rejection sampling failed to find an admissible point.
    #[error("sampling exhausted after {rejections} rejections for {relation}")]
    SamplingExhausted { relation: String, rejections: u64 },

    /// Sequence lengths disagree with the index contract.
    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    /// A precision policy violating its own invariants was requested.
    #[error("invalid precision policy: {0}")]
    InvalidPolicy(String),

    /// Malformed textual input (complex literals, kind strings, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Numerical engine and machine-readable catalog for contiguous relations of
//! ₃φ₂ basic hypergeometric series.
//!
//! Module map:
//! * [`scalar`] — complex numbers at a configurable working precision and the
//!   [`scalar::PrecisionPolicy`] every evaluation reads.
//! * [`qpoch`] — q-shifted factorials (x;q)ₙ for all integer orders, (x;q)_∞,
//!   and factor-interleaved list quotients.
//! * [`series`] — tail-bounded evaluation of rφs, the shifted rφs*, and the
//!   classical rFs / rFs* at a point.
//! * [`classical`] — shifted factorials, numerical Γ, and Γ-quotients for the
//!   classical-side identities.
//! * [`relations`] — the relation catalog: every identity as a data record
//!   with closed-form coefficient rules, series templates, and admissibility
//!   constraints; plus instantiation and residual computation.
//! * [`verify`] — randomized verification campaigns, q→1 coefficient-limit
//!   checks, and the finite Abel summation-by-parts identity.
//!
//! All operations are pure functions of their inputs plus an explicitly
//! passed policy; everything is safe to call concurrently.

pub mod classical;
pub mod error;
pub mod qpoch;
pub mod relations;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{PrecisionMode, PrecisionPolicy, Scalar};

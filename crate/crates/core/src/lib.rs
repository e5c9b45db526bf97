//! Density decisions for finitely generated additive subgroups of ℝ^d and ℂ^n,
//! and dense-orbit certification for abelian subgroups of GL(n, ℂ).
//!
//! The pipeline has three layers:
//!
//! * an exact layer ([`number_field`]) deciding density of
//!   H = ℤx₁ + … + ℤx_p completely when the coordinates live in a real
//!   number field ℚ(θ);
//! * a numeric layer ([`lattice`]) searching for integer relations with LLL
//!   when coordinates are floating point, yielding height-qualified verdicts;
//! * a matrix layer ([`matgroup`], [`certify`]) that builds a finite pool of
//!   logarithms of a commuting generator family and searches it for a
//!   (2n+1)-tuple whose values at a point generate a dense subgroup,
//!   certifying the orbit closure has nonempty interior.
//!
//! [`sampler`] is an independent empirical cross-check: it enumerates
//! subgroup/orbit points and measures grid coverage, so certified verdicts can
//! be compared against what the points actually do.

pub mod certify;
pub mod config;
pub mod density;
pub mod formats;
pub mod lattice;
pub mod linalg;
pub mod matgroup;
pub mod number_field;
pub mod rational;
pub mod sampler;

pub use config::Tolerances;
pub use density::{Ambient, DensityOutcome, DensityVerdict, GeneratorFamily};

pub use lattice::{IntegerRelation, LatticeBasis};

pub use number_field::{FieldElement, NumberField};

/// Version string stamped into emitted certificates.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

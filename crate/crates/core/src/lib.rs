//! Qubit phase-space geometry built around the "quantum potato chip": the
//! surface of qubit states whose SIC-POVM probability 4-vector factorizes
//! into two independent binary distributions.
//!
//! The crate provides
//!
//! - minimal dense complex linear algebra for 2x2/4x4 systems ([`linalg`]),
//! - density matrices, Bloch vectors and physicality checks ([`qubit`]),
//! - the probability-simplex rotation/projection, the QBism SIC-POVM and
//!   Wootters phase-space bases, and all conversions among probability
//!   4-vectors, density matrices and Bloch vectors ([`phase_space`]),
//! - the chip surfaces, their boundaries in both bases, membership and
//!   factorization tests, and the Matthews correlation field ([`chip`]),
//! - POVMs, coarse-grained two-outcome measurements and two-measurement
//!   state reconstruction ([`measurement`]),
//! - the six standard noise channels as Kraus maps and their action on the
//!   chip ([`channel`]),
//! - the boundary-confined Liouvillian evolution with signed damping rates
//!   ([`liouvillian`]),
//! - named runtime invariant suites backing the `check` CLI command
//!   ([`check`]).
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod channel;
pub mod check;
pub mod chip;
pub mod linalg;
pub mod liouvillian;
pub mod measurement;
pub mod phase_space;
pub mod qubit;

use thiserror::Error;

/// Algebraic tolerance: closed-form identities are expected to hold to this
/// accuracy in IEEE double precision.
pub const TOL_ALG: f64 = 1e-12;

/// Physicality tolerance: eigenvalue / norm slack when deciding whether a
/// state is physical.
pub const TOL_PHYS: f64 = 1e-9;

/// Exclusion zone around the transition-rate singularity at p = 1/2.
pub const EPS_SING: f64 = 1e-6;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (defect {0:.3e})")]
    NonHermitian(f64),
    #[error("matrix trace is not 1 (got {0})")]
    TraceNotOne(f64),
    #[error("vector components do not sum to 1 (got {0})")]
    NotNormalized(f64),
    #[error("phase-space basis is not informationally complete")]
    SingularBasis,
    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error("p = {0} is outside the boundary support interval")]
    OutsideSupport(f64),
    #[error("degenerate marginal distribution (smallest marginal {0:.3e})")]
    DegenerateMarginal(f64),
    #[error("state is not physical (lowest eigenvalue {0:.3e})")]
    Unphysical(f64),
    #[error("transition generator is singular at p = {0}")]
    SingularParameter(f64),
    #[error("axes of a reconstruction pair must differ")]
    InvalidAxisPair,
    #[error("integration failed: {0}")]
    IntegrationFailure(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use chip::{BoundaryBranch, ChipPoint, Membership, Orientation};
pub use linalg::{Mat2, C64};
pub use phase_space::{BasisKind, PhaseSpaceBasis, ProbMode, ProbVector4, Tetra3Point};
pub use qubit::{BlochVector, DensityMatrix, EigenPair};

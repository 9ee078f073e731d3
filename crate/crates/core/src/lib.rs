//! Exact finite-horizon toolkit for Nörlund summation methods.
//!
//! Every quantity is an arbitrary-precision rational and every operation is
//! exact: weighted means and their inverses (triangular Toeplitz solves),
//! comparison coefficients between two methods, the inclusion matrix
//! expressing one method's means in terms of another's, and the Riesz
//! condition profiles that grade inclusion and regularity evidence at a
//! finite horizon.
//!
//! The crate is `no_std` (with `alloc`); file formats, serialization, and
//! the command-line surface live in the companion `norlund-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod comparison;
pub mod error;
pub mod families;
pub mod kernel;
pub mod matrix;
pub mod means;
pub mod riesz;

pub use comparison::ComparisonCoefficients;
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec};
pub use kernel::{
    BoundednessProbe, BoundednessVerdict, ConvergenceDiagnostic, GrowthParams, ProbeParams,
    Scalar, SequencePrefix, Verdict, WeightMode, WeightSequence,
};
pub use matrix::{InclusionMatrixRow, SstReport};
pub use means::{NorlundMethod, SummabilityReport};
pub use riesz::{InclusionVerdict, RieszReport};

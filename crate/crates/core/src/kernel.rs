//! Exact scalars, sequence prefixes, weight validation, and the
//! finite-horizon convergence probes shared by every other module.

mod probe;
mod scalar;
mod sequence;

pub use probe::{
    boundedness_probe, limit_probe, limit_probe_toward, BoundednessProbe, BoundednessVerdict,
    ConvergenceDiagnostic, GrowthParams, ProbeParams, Verdict,
};
pub use scalar::{ParseScalarError, Scalar};
pub use sequence::{validate_weights, SequencePrefix, WeightMode, WeightSequence};

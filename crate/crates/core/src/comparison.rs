//! Comparison coefficients: the unique k with q = k * p.
//!
//! Solving `q_n = k_0 p_n + ... + k_n p_0` recursively is a triangular
//! Toeplitz solve with constant diagonal p_0, so k exists and is unique for
//! every valid method pair. Coefficients may be negative; no sign
//! constraints apply to k.

use alloc::string::String;
use alloc::vec::Vec;

use crate::kernel::{Scalar, SequencePrefix};
use crate::means::NorlundMethod;

/// The solution k of q = k * p, tagged with its source method names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComparisonCoefficients {
    values: SequencePrefix,
    source_p: String,
    source_q: String,
}

impl ComparisonCoefficients {
    pub fn values(&self) -> &SequencePrefix {
        &self.values
    }

    pub fn coefficient(&self, n: usize) -> &Scalar {
        &self.values[n]
    }

    pub fn horizon(&self) -> usize {
        self.values.horizon()
    }

    pub fn source_p(&self) -> &str {
        &self.source_p
    }

    pub fn source_q(&self) -> &str {
        &self.source_q
    }
}

/// Forward-substitution solve of q = k * p up to the common horizon.
pub fn comparison_coefficients(p: &NorlundMethod, q: &NorlundMethod) -> ComparisonCoefficients {
    let horizon = p.horizon().min(q.horizon());
    let pw = p.weights.weights();
    let leading = p.weights.weight(0);
    let mut k: Vec<Scalar> = Vec::with_capacity(horizon + 1);
    for n in 0..=horizon {
        let mut acc = q.weights.weight(n).clone();
        for (i, k_i) in k.iter().enumerate() {
            acc -= k_i * &pw[n - i];
        }
        k.push(acc / leading);
    }
    ComparisonCoefficients {
        values: SequencePrefix::new(k),
        source_p: p.name.clone(),
        source_q: q.name.clone(),
    }
}

/// Cauchy product `out[n] = sum_{i<=n} a_i b_{n-i}` up to the common horizon.
pub fn convolve(a: &SequencePrefix, b: &SequencePrefix) -> SequencePrefix {
    let horizon = a.horizon().min(b.horizon());
    SequencePrefix::from_fn(horizon, |n| (0..=n).map(|i| &a[i] * &b[n - i]).sum())
}

/// Checks the summed identity `Q_n = k_0 P_n + ... + k_n P_0` at every
/// index up to the common horizon. Holds for any k derived from (p, q); a
/// false return signals an internal bug.
pub fn verify_q_identity(
    k: &ComparisonCoefficients,
    p: &NorlundMethod,
    q: &NorlundMethod,
) -> bool {
    let horizon = k.horizon().min(p.horizon()).min(q.horizon());
    let pp = p.weights.prefix_sums();
    (0..=horizon).all(|n| {
        let lhs: Scalar = (0..=n).map(|i| k.coefficient(i) * &pp[n - i]).sum();
        &lhs == q.weights.prefix_sum(n)
    })
}

//! The Nörlund transform, its inverse, and series-to-sequence plumbing.
//!
//! The transform sends s to the weighted averages
//! `(p_0 s_m + ... + p_m s_0) / P_m`; the inverse recovers s from its
//! means by forward substitution through the same triangular Toeplitz
//! system, exactly.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kernel::{
    limit_probe, ConvergenceDiagnostic, ProbeParams, Scalar, SequencePrefix, WeightSequence,
};

/// A named Nörlund method (N, p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NorlundMethod {
    pub name: String,
    pub weights: WeightSequence,
}

impl NorlundMethod {
    pub fn new(name: impl Into<String>, weights: WeightSequence) -> Self {
        NorlundMethod {
            name: name.into(),
            weights,
        }
    }

    pub fn horizon(&self) -> usize {
        self.weights.horizon()
    }

    pub fn conforming(&self) -> bool {
        self.weights.conforming()
    }
}

/// Weighted means `out[m] = (1/P_m) sum_{n<=m} p_{m-n} s_n`, exact.
///
/// Horizons are reconciled by truncating to the shorter prefix. Fails only
/// when a relaxed-mode method has some vanishing prefix sum P_m.
pub fn norlund_means(method: &NorlundMethod, s: &SequencePrefix) -> Result<SequencePrefix> {
    let horizon = method.horizon().min(s.horizon());
    let weights = method.weights.weights();
    let mut out = Vec::with_capacity(horizon + 1);
    for m in 0..=horizon {
        let mut acc = Scalar::zero();
        for n in 0..=m {
            acc += &weights[m - n] * &s[n];
        }
        let divisor = method.weights.prefix_sum(m);
        if divisor.is_zero() {
            return Err(Error::ZeroPrefixSum {
                symbol: 'P',
                index: m,
            });
        }
        out.push(acc / divisor);
    }
    Ok(SequencePrefix::new(out))
}

/// Inverse of [`norlund_means`]: the unique r with `norlund_means(method, r)
/// = target`, found by forward substitution. Always solvable since p_0 != 0.
pub fn unmean(method: &NorlundMethod, target: &SequencePrefix) -> SequencePrefix {
    let horizon = method.horizon().min(target.horizon());
    let weights = method.weights.weights();
    let leading = method.weights.weight(0);
    let mut r: Vec<Scalar> = Vec::with_capacity(horizon + 1);
    for n in 0..=horizon {
        let mut acc = method.weights.prefix_sum(n) * &target[n];
        for (i, r_i) in r.iter().enumerate() {
            acc -= &weights[n - i] * r_i;
        }
        r.push(acc / leading);
    }
    SequencePrefix::new(r)
}

/// Partial sums `out[n] = a_0 + ... + a_n`.
pub fn partial_sums(terms: &SequencePrefix) -> SequencePrefix {
    let mut acc = Scalar::zero();
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        acc += term;
        out.push(acc.clone());
    }
    SequencePrefix::new(out)
}

/// Means of the partial sums plus the tail diagnostic on them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SummabilityReport {
    pub means: SequencePrefix,
    pub diagnostic: ConvergenceDiagnostic,
}

/// Applies the method to the partial sums of a series and probes the result.
pub fn summability_report(
    method: &NorlundMethod,
    terms: &SequencePrefix,
    params: &ProbeParams,
) -> Result<SummabilityReport> {
    let sums = partial_sums(terms);
    let means = norlund_means(method, &sums)?;
    let diagnostic = limit_probe(&means, params)?;
    Ok(SummabilityReport { means, diagnostic })
}

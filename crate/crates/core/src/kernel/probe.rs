//! Finite-horizon convergence and boundedness probes.
//!
//! These grade evidence, never truth: a verdict says what the computed
//! prefix looks like at the configured horizon and thresholds.

use core::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Scalar, SequencePrefix};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    ConvergingEvidence,
    DivergingEvidence,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ConvergingEvidence => "converging-evidence",
            Verdict::DivergingEvidence => "diverging-evidence",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of probing one sequence prefix for a limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConvergenceDiagnostic {
    /// Final prefix value; absent when the verdict is diverging-evidence.
    pub estimated_limit: Option<Scalar>,
    /// Number of tail indices inspected.
    pub tail_window: usize,
    /// Max deviation of the tail from the probe target.
    pub max_tail_oscillation: Scalar,
    pub verdict: Verdict,
}

/// Tail-probe configuration.
///
/// `window = None` derives `max(8, M/10)` clamped to the prefix length.
/// The verdict is converging-evidence when the tail oscillation stays
/// within `threshold`, diverging-evidence when it reaches
/// `diverge_factor * threshold`, and inconclusive in between.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeParams {
    pub window: Option<usize>,
    pub threshold: Scalar,
    pub diverge_factor: Scalar,
}

impl Default for ProbeParams {
    fn default() -> Self {
        ProbeParams {
            window: None,
            threshold: Scalar::ratio(1, 100),
            diverge_factor: Scalar::from_int(10),
        }
    }
}

impl ProbeParams {
    pub fn with_window(window: usize) -> Self {
        ProbeParams {
            window: Some(window),
            ..ProbeParams::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.threshold.is_positive() {
            return Err(Error::ThresholdNotPositive {
                threshold: self.threshold.clone(),
            });
        }
        if self.diverge_factor < Scalar::one() {
            return Err(Error::DivergeFactorBelowOne {
                factor: self.diverge_factor.clone(),
            });
        }
        Ok(())
    }

    /// Concrete window for a prefix of `len` values.
    pub fn effective_window(&self, len: usize) -> Result<usize> {
        match self.window {
            Some(w) => {
                if w < 2 || w > len {
                    Err(Error::WindowOutOfRange {
                        window: w,
                        available: len,
                    })
                } else {
                    Ok(w)
                }
            }
            None => {
                let w = len.min(8.max((len - 1) / 10));
                if w < 2 {
                    Err(Error::WindowOutOfRange {
                        window: 2,
                        available: len,
                    })
                } else {
                    Ok(w)
                }
            }
        }
    }
}

/// Probes whether `seq` is settling on its own final value.
pub fn limit_probe(seq: &SequencePrefix, params: &ProbeParams) -> Result<ConvergenceDiagnostic> {
    limit_probe_toward(seq, seq.last(), params)
}

/// Probes whether the tail of `seq` stays near `target`.
pub fn limit_probe_toward(
    seq: &SequencePrefix,
    target: &Scalar,
    params: &ProbeParams,
) -> Result<ConvergenceDiagnostic> {
    params.validate()?;
    let window = params.effective_window(seq.len())?;
    let start = seq.len() - window;

    let mut oscillation = Scalar::zero();
    for value in &seq.values()[start..] {
        let dev = (value - target).abs();
        if dev > oscillation {
            oscillation = dev;
        }
    }

    let verdict = if oscillation <= params.threshold {
        Verdict::ConvergingEvidence
    } else if oscillation >= &params.diverge_factor * &params.threshold {
        Verdict::DivergingEvidence
    } else {
        Verdict::Inconclusive
    };

    Ok(ConvergenceDiagnostic {
        estimated_limit: match verdict {
            Verdict::DivergingEvidence => None,
            _ => Some(seq.last().clone()),
        },
        tail_window: window,
        max_tail_oscillation: oscillation,
        verdict,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundednessVerdict {
    BoundedEvidence,
    UnboundedEvidence,
    Inconclusive,
}

impl BoundednessVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundednessVerdict::BoundedEvidence => "bounded-evidence",
            BoundednessVerdict::UnboundedEvidence => "unbounded-evidence",
            BoundednessVerdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for BoundednessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Growth grading for the boundedness probe: the sup of `|profile|` over
/// indices in `(M/2, M]` is compared against the sup over `(M/4, M/2]`.
/// Ratio at most `hold_factor` reads as bounded evidence, at least
/// `fail_factor` as unbounded evidence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthParams {
    pub hold_factor: Scalar,
    pub fail_factor: Scalar,
}

impl Default for GrowthParams {
    fn default() -> Self {
        GrowthParams {
            hold_factor: Scalar::ratio(101, 100),
            fail_factor: Scalar::ratio(11, 10),
        }
    }
}

impl GrowthParams {
    fn validate(&self) -> Result<()> {
        if self.hold_factor < Scalar::one() || self.fail_factor < self.hold_factor {
            return Err(Error::GrowthFactorsInvalid {
                hold: self.hold_factor.clone(),
                fail: self.fail_factor.clone(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundednessProbe {
    /// sup of |profile| over the whole prefix: the bound actually observed.
    pub sup_at_horizon: Scalar,
    /// sup of |profile| over indices in (M/4, M/2]; None when empty.
    pub first_window_sup: Option<Scalar>,
    /// sup of |profile| over indices in (M/2, M]; None when empty.
    pub second_window_sup: Option<Scalar>,
    /// second/first window sup; None when the first sup vanishes or a
    /// window is empty.
    pub growth_ratio: Option<Scalar>,
    pub verdict: BoundednessVerdict,
}

fn window_sup(profile: &SequencePrefix, lo: usize, hi: usize) -> Option<Scalar> {
    if lo > hi {
        return None;
    }
    let mut sup = Scalar::zero();
    for value in &profile.values()[lo..=hi] {
        let mag = value.abs();
        if mag > sup {
            sup = mag;
        }
    }
    Some(sup)
}

/// Grades boundedness evidence for a profile by comparing quartile-window
/// sups of its absolute values.
pub fn boundedness_probe(
    profile: &SequencePrefix,
    params: &GrowthParams,
) -> Result<BoundednessProbe> {
    params.validate()?;
    let m = profile.horizon();
    let sup_at_horizon = window_sup(profile, 0, m).expect("prefix is nonempty");

    let first = if m / 4 + 1 <= m / 2 {
        window_sup(profile, m / 4 + 1, m / 2)
    } else {
        None
    };
    let second = if m / 2 + 1 <= m {
        window_sup(profile, m / 2 + 1, m)
    } else {
        None
    };

    let (growth_ratio, verdict) = match (&first, &second) {
        (Some(f), Some(s)) if f.is_zero() && s.is_zero() => {
            (None, BoundednessVerdict::BoundedEvidence)
        }
        (Some(f), Some(_)) if f.is_zero() => (None, BoundednessVerdict::Inconclusive),
        (Some(f), Some(s)) => {
            let ratio = s / f;
            let verdict = if ratio >= params.fail_factor {
                BoundednessVerdict::UnboundedEvidence
            } else if ratio <= params.hold_factor {
                BoundednessVerdict::BoundedEvidence
            } else {
                BoundednessVerdict::Inconclusive
            };
            (Some(ratio), verdict)
        }
        _ => (None, BoundednessVerdict::Inconclusive),
    };

    Ok(BoundednessProbe {
        sup_at_horizon,
        first_window_sup: first,
        second_window_sup: second,
        growth_ratio,
        verdict,
    })
}

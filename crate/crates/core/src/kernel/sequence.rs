//! Sequence prefixes and validated Nörlund weight sequences.

use alloc::vec::Vec;
use core::ops::Index;
use core::slice;

use crate::error::{Error, Result};
use crate::kernel::Scalar;

/// Values of a sequence at indices `0..=M`; `M` is the horizon.
///
/// A prefix always holds at least index 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequencePrefix {
    values: Vec<Scalar>,
}

impl SequencePrefix {
    /// Panics if `values` is empty.
    pub fn new(values: Vec<Scalar>) -> Self {
        assert!(!values.is_empty(), "sequence prefix must be nonempty");
        SequencePrefix { values }
    }

    pub fn from_fn(horizon: usize, f: impl FnMut(usize) -> Scalar) -> Self {
        SequencePrefix {
            values: (0..=horizon).map(f).collect(),
        }
    }

    pub fn constant(value: Scalar, horizon: usize) -> Self {
        Self::from_fn(horizon, |_| value.clone())
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    pub fn from_ratios(values: &[(i64, i64)]) -> Self {
        Self::new(values.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
    }

    /// Largest index held, i.e. `len() - 1`.
    pub fn horizon(&self) -> usize {
        self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn iter(&self) -> slice::Iter<'_, Scalar> {
        self.values.iter()
    }

    pub fn last(&self) -> &Scalar {
        self.values.last().expect("prefix is nonempty")
    }

    /// Copy of the prefix cut down to `min(horizon, self.horizon())`.
    pub fn truncated(&self, horizon: usize) -> Self {
        let end = horizon.min(self.horizon());
        SequencePrefix {
            values: self.values[..=end].to_vec(),
        }
    }
}

impl Index<usize> for SequencePrefix {
    type Output = Scalar;
    fn index(&self, index: usize) -> &Scalar {
        &self.values[index]
    }
}

impl<'a> IntoIterator for &'a SequencePrefix {
    type Item = &'a Scalar;
    type IntoIter = slice::Iter<'a, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.values.iter()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightMode {
    /// p_0 > 0 and p_n >= 0 for n >= 1.
    Strict,
    /// Only p_0 != 0; the result is flagged non-conforming.
    Relaxed,
}

/// Weights p_0..p_M together with their prefix sums P_0..P_M.
///
/// Constructed only through [`validate_weights`], so p_0 is always nonzero
/// and, in strict mode, the sign constraints hold and the prefix sums are
/// strictly positive and nondecreasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightSequence {
    weights: SequencePrefix,
    prefix_sums: SequencePrefix,
    conforming: bool,
}

impl WeightSequence {
    pub fn weights(&self) -> &SequencePrefix {
        &self.weights
    }

    pub fn prefix_sums(&self) -> &SequencePrefix {
        &self.prefix_sums
    }

    pub fn weight(&self, n: usize) -> &Scalar {
        &self.weights[n]
    }

    pub fn prefix_sum(&self, n: usize) -> &Scalar {
        &self.prefix_sums[n]
    }

    pub fn horizon(&self) -> usize {
        self.weights.horizon()
    }

    /// False iff the weights were accepted under relaxed validation.
    pub fn conforming(&self) -> bool {
        self.conforming
    }
}

/// Checks the sign constraints on raw weights and computes prefix sums.
pub fn validate_weights(raw: SequencePrefix, mode: WeightMode) -> Result<WeightSequence> {
    let leading = &raw[0];
    match mode {
        WeightMode::Strict => {
            if !leading.is_positive() {
                return Err(Error::LeadingWeightNotPositive {
                    value: leading.clone(),
                });
            }
            for (index, value) in raw.iter().enumerate().skip(1) {
                if value.is_negative() {
                    return Err(Error::NegativeWeight {
                        index,
                        value: value.clone(),
                    });
                }
            }
        }
        WeightMode::Relaxed => {
            if leading.is_zero() {
                return Err(Error::LeadingWeightZero);
            }
        }
    }

    let mut sums = Vec::with_capacity(raw.len());
    let mut acc = Scalar::zero();
    for value in &raw {
        acc += value;
        sums.push(acc.clone());
    }

    Ok(WeightSequence {
        weights: raw,
        prefix_sums: SequencePrefix::new(sums),
        conforming: matches!(mode, WeightMode::Strict),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn delta_weights_prefix_sums() {
        let ws = validate_weights(SequencePrefix::from_ints(&[1, 0, 0, 0]), WeightMode::Strict)
            .unwrap();
        assert_eq!(ws.prefix_sums(), &SequencePrefix::from_ints(&[1, 1, 1, 1]));
        assert!(ws.conforming());
    }

    #[test]
    fn ones_prefix_sums() {
        let ws = validate_weights(SequencePrefix::from_ints(&[1, 1, 1, 1]), WeightMode::Strict)
            .unwrap();
        assert_eq!(ws.prefix_sums(), &SequencePrefix::from_ints(&[1, 2, 3, 4]));
    }

    #[test]
    fn strict_rejects_nonpositive_leading() {
        let err = validate_weights(SequencePrefix::from_ints(&[0, 1, 1]), WeightMode::Strict)
            .unwrap_err();
        assert_eq!(
            err,
            Error::LeadingWeightNotPositive {
                value: Scalar::zero()
            }
        );
        assert!(err.to_string().contains("p_0 must be positive"));
    }

    #[test]
    fn strict_rejects_negative_weight() {
        let err = validate_weights(SequencePrefix::from_ints(&[1, -1]), WeightMode::Strict)
            .unwrap_err();
        assert_eq!(
            err,
            Error::NegativeWeight {
                index: 1,
                value: Scalar::from_int(-1)
            }
        );
    }

    #[test]
    fn relaxed_allows_negative_but_flags() {
        let ws = validate_weights(SequencePrefix::from_ints(&[1, -1, 2]), WeightMode::Relaxed)
            .unwrap();
        assert!(!ws.conforming());
        assert_eq!(ws.prefix_sums(), &SequencePrefix::from_ints(&[1, 0, 2]));
    }

    #[test]
    fn relaxed_rejects_zero_leading() {
        let err = validate_weights(SequencePrefix::from_ints(&[0, 1]), WeightMode::Relaxed)
            .unwrap_err();
        assert_eq!(err, Error::LeadingWeightZero);
    }

    #[test]
    fn truncated_keeps_prefix() {
        let s = SequencePrefix::from_ints(&[5, 6, 7, 8]);
        assert_eq!(s.truncated(1), SequencePrefix::from_ints(&[5, 6]));
        assert_eq!(s.truncated(99), s);
    }

    fn weight_vec() -> impl Strategy<Value = Vec<Scalar>> {
        (
            (1i64..=30, 1i64..=10),
            proptest::collection::vec((0i64..=30, 1i64..=10), 0..16),
        )
            .prop_map(|(first, rest)| {
                let mut v = alloc::vec![Scalar::ratio(first.0, first.1)];
                v.extend(rest.into_iter().map(|(n, d)| Scalar::ratio(n, d)));
                v
            })
    }

    proptest! {
        #[test]
        fn prefix_sum_differences_recover_weights(values in weight_vec()) {
            let raw = SequencePrefix::new(values);
            let ws = validate_weights(raw.clone(), WeightMode::Strict).unwrap();
            for n in 1..raw.len() {
                prop_assert_eq!(
                    ws.prefix_sum(n) - ws.prefix_sum(n - 1),
                    raw[n].clone()
                );
            }
            prop_assert_eq!(ws.prefix_sum(0), &raw[0]);
        }
    }
}

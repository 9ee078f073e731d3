//! Error type shared across the crate.

use core::fmt;

use crate::kernel::Scalar;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in core computations. Messages name the
/// violated constraint so callers can surface them verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A weight sequence had no entries at all.
    EmptyWeights,
    /// Strict validation: p_0 must be strictly positive.
    LeadingWeightNotPositive { value: Scalar },
    /// Relaxed validation: p_0 must at least be nonzero.
    LeadingWeightZero,
    /// Strict validation: p_n >= 0 for n >= 1.
    NegativeWeight { index: usize, value: Scalar },
    /// Probe window outside `2..=available`.
    WindowOutOfRange { window: usize, available: usize },
    ThresholdNotPositive { threshold: Scalar },
    DivergeFactorBelowOne { factor: Scalar },
    /// Growth factors must satisfy 1 <= hold <= fail.
    GrowthFactorsInvalid { hold: Scalar, fail: Scalar },
    /// A prefix sum used as a divisor vanished (possible only for
    /// relaxed-mode weights).
    ZeroPrefixSum { symbol: char, index: usize },
    /// An operation needed a longer prefix than was supplied.
    HorizonTooShort { needed: usize, available: usize },
    /// Matrix rows must be exactly 0..=M in order.
    MatrixRowsNotContiguous { expected: usize, found: usize },
    EmptyMatrix,
    CesaroAlphaNegative { alpha: Scalar },
    GeometricRatioNotPositive { ratio: Scalar },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWeights => write!(f, "weight sequence must be nonempty"),
            Error::LeadingWeightNotPositive { value } => {
                write!(f, "leading weight p_0 must be positive (got {value})")
            }
            Error::LeadingWeightZero => {
                write!(f, "leading weight p_0 must be nonzero in relaxed mode")
            }
            Error::NegativeWeight { index, value } => {
                write!(
                    f,
                    "weight p_{index} must be nonnegative in strict mode (got {value})"
                )
            }
            Error::WindowOutOfRange { window, available } => {
                write!(f, "probe window {window} outside valid range 2..={available}")
            }
            Error::ThresholdNotPositive { threshold } => {
                write!(f, "probe threshold must be positive (got {threshold})")
            }
            Error::DivergeFactorBelowOne { factor } => {
                write!(f, "diverge factor must be at least 1 (got {factor})")
            }
            Error::GrowthFactorsInvalid { hold, fail } => {
                write!(
                    f,
                    "growth factors must satisfy 1 <= hold <= fail (got hold={hold}, fail={fail})"
                )
            }
            Error::ZeroPrefixSum { symbol, index } => {
                write!(f, "prefix sum {symbol}_{index} is zero, mean undefined")
            }
            Error::HorizonTooShort { needed, available } => {
                write!(f, "prefix horizon {available} too short, need at least {needed}")
            }
            Error::MatrixRowsNotContiguous { expected, found } => {
                write!(
                    f,
                    "matrix rows must be contiguous from 0: expected row {expected}, found {found}"
                )
            }
            Error::EmptyMatrix => write!(f, "matrix must contain at least one row"),
            Error::CesaroAlphaNegative { alpha } => {
                write!(f, "cesaro parameter alpha must be nonnegative (got {alpha})")
            }
            Error::GeometricRatioNotPositive { ratio } => {
                write!(f, "geometric ratio must be positive (got {ratio})")
            }
        }
    }
}

impl core::error::Error for Error {}

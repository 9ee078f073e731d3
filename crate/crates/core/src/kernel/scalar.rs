//! Exact rational scalar.
//!
//! `Scalar` is the single numeric type of the crate: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Arithmetic is
//! exact everywhere; the only place digits are dropped is the explicit
//! [`Scalar::to_decimal`] renderer used for report output.

use alloc::string::{String, ToString};
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`, reduced. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be nonzero");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Renders the exact value with `sig_digits` significant digits,
    /// rounding the last digit half-away-from-zero. Values with decimal
    /// exponent outside `-4..sig_digits` use `d.dddde{exp}` notation;
    /// trailing zeros are trimmed.
    pub fn to_decimal(&self, sig_digits: usize) -> String {
        let sig = sig_digits.max(1);
        if self.is_zero() {
            return String::from("0");
        }
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        let ten = BigInt::from(10);

        // Decimal exponent e with |self| in [10^e, 10^(e+1)).
        let int_part = &num / &den;
        let mut e: i64 = if !int_part.is_zero() {
            int_part.to_string().len() as i64 - 1
        } else {
            let mut k: i64 = 1;
            let mut scaled = &num * &ten;
            while scaled < den {
                scaled *= &ten;
                k += 1;
            }
            -k
        };

        // First `sig` digits, rounded.
        let shift = sig as i64 - 1 - e;
        let (x, y) = if shift >= 0 {
            (&num * Pow::pow(&ten, shift as u64), den)
        } else {
            (num.clone(), &den * Pow::pow(&ten, (-shift) as u64))
        };
        let mut q = &x / &y;
        let rem = &x - &q * &y;
        if &rem * BigInt::from(2) >= y {
            q += 1;
        }
        let mut digits = q.to_string();
        if digits.len() > sig {
            // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
            digits.truncate(sig);
            e += 1;
        }

        let body = if (-4..sig as i64).contains(&e) {
            if e >= 0 {
                let point = e as usize + 1;
                let frac = digits[point..].trim_end_matches('0');
                if frac.is_empty() {
                    digits[..point].to_string()
                } else {
                    let mut s = String::from(&digits[..point]);
                    s.push('.');
                    s.push_str(frac);
                    s
                }
            } else {
                let mut s = String::from("0.");
                for _ in 0..(-e - 1) {
                    s.push('0');
                }
                s.push_str(digits.trim_end_matches('0'));
                s
            }
        } else {
            let frac = digits[1..].trim_end_matches('0');
            let mut s = String::from(&digits[..1]);
            if !frac.is_empty() {
                s.push('.');
                s.push_str(frac);
            }
            s.push('e');
            s.push_str(&e.to_string());
            s
        };

        if self.is_negative() {
            let mut s = String::from("-");
            s.push_str(&body);
            s
        } else {
            body
        }
    }
}

/// Prints `n/d`, or just `n` for integers.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseScalarError {
    Empty,
    InvalidInteger,
    ZeroDenominator,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseScalarError::Empty => write!(f, "empty rational literal"),
            ParseScalarError::InvalidInteger => write!(f, "invalid integer in rational literal"),
            ParseScalarError::ZeroDenominator => write!(f, "rational denominator must be nonzero"),
        }
    }
}

impl core::error::Error for ParseScalarError {}

/// Parses `"n"` or `"n/d"` with optional sign on either part.
impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| ParseScalarError::InvalidInteger)?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((num, den)) => {
                let n =
                    BigInt::from_str(num.trim()).map_err(|_| ParseScalarError::InvalidInteger)?;
                let d =
                    BigInt::from_str(den.trim()).map_err(|_| ParseScalarError::InvalidInteger)?;
                if d.is_zero() {
                    return Err(ParseScalarError::ZeroDenominator);
                }
                Ok(Scalar(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), Add::add)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_roundtrip() {
        for text in ["0", "3", "-7", "1/2", "-1/2", "22/7"] {
            let s: Scalar = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!("2/4".parse::<Scalar>().unwrap(), Scalar::ratio(1, 2));
        assert_eq!("1/-2".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
        assert_eq!("-0".parse::<Scalar>().unwrap(), Scalar::zero());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!("".parse::<Scalar>(), Err(ParseScalarError::Empty));
        assert_eq!("1/0".parse::<Scalar>(), Err(ParseScalarError::ZeroDenominator));
        assert_eq!("a/2".parse::<Scalar>(), Err(ParseScalarError::InvalidInteger));
        assert_eq!("1.5".parse::<Scalar>(), Err(ParseScalarError::InvalidInteger));
    }

    #[test]
    fn decimal_rendering() {
        let cases = [
            (Scalar::zero(), 12, "0"),
            (Scalar::ratio(1, 2), 12, "0.5"),
            (Scalar::ratio(-7, 4), 12, "-1.75"),
            (Scalar::ratio(1, 3), 12, "0.333333333333"),
            (Scalar::ratio(2, 3), 12, "0.666666666667"),
            (Scalar::from_int(513), 12, "513"),
            (Scalar::ratio(101, 201), 12, "0.502487562189"),
            (Scalar::ratio(9999, 10000), 3, "1"),
            (Scalar::ratio(1, 8128), 4, "0.000123"),
            (Scalar::ratio(1, 200000), 6, "5e-6"),
            (Scalar::ratio(-1, 200000), 6, "-5e-6"),
            (Scalar::from_int(1_000_000_000_000), 12, "1e12"),
            (Scalar::ratio(123, 100), 2, "1.2"),
            (Scalar::ratio(125, 100), 2, "1.3"),
        ];
        for (value, sig, expect) in cases {
            assert_eq!(value.to_decimal(sig), expect, "value {value}");
        }
    }

    #[test]
    fn decimal_of_huge_power() {
        // 2^130 has 40 digits; forced into exponent notation.
        let mut v = Scalar::one();
        for _ in 0..130 {
            v = v * Scalar::from_int(2);
        }
        assert_eq!(v.to_decimal(6), "1.36113e39");
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-200i64..=200, 1i64..=40).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    proptest! {
        #[test]
        fn add_sub_exact(a in small_rational(), b in small_rational()) {
            prop_assert_eq!((&a + &b) - &b, a);
        }

        #[test]
        fn mul_div_exact(a in small_rational(), b in small_rational()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b) / &b, a);
        }

        #[test]
        fn display_parse_roundtrip(a in small_rational()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
        }
    }
}

//! Scalar abstraction: every quantity in the library is generic over a real
//! floating-point type, so the whole pipeline (vectorization, barrier
//! calculus, interior-point iterations) can run in native double or in
//! double-double extended precision.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign};
use twofloat::TwoFloat;

/// Real scalar type usable throughout the library.
///
/// `Float` supplies arithmetic, `sqrt`, `ln`, comparisons and special values.
/// The extra methods pin down conversions and the *actual* unit roundoff of
/// the type (the `Float::epsilon` of some wrapper types is meaningless).
pub trait Scalar:
    Float + NumAssign + FromPrimitive + Send + Sync + Debug + Display + 'static
{
    /// Exact embedding of a double into this type.
    fn from_f64(v: f64) -> Self;

    /// Nearest double (for reporting; may lose precision).
    fn to_f64(self) -> f64;

    /// Unit roundoff of the type.
    fn eps() -> Self;

    /// Short human-readable name used in reports ("double", "double-double").
    fn type_name() -> &'static str;

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::one() / Self::two()
    }

    /// ln(2), used for the nats/bits conversion.
    #[inline]
    fn ln2() -> Self {
        Self::two().ln()
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }

    #[inline]
    fn eps() -> Self {
        f64::EPSILON
    }

    fn type_name() -> &'static str {
        "double"
    }
}

/// Double-double scalar: an unevaluated sum of two doubles with roughly 106
/// bits of mantissa. This is the one extended-precision type the library
/// ships; it reproduces the precision trend of the regression table without
/// arbitrary-precision arithmetic.
pub type Extended = TwoFloat;

impl Scalar for TwoFloat {
    #[inline]
    fn from_f64(v: f64) -> Self {
        TwoFloat::from(v)
    }

    #[inline]
    fn to_f64(self) -> f64 {
        f64::from(self)
    }

    #[inline]
    fn eps() -> Self {
        // 2^-104: conservative unit roundoff for double-double arithmetic.
        TwoFloat::from(2.0f64.powi(-104))
    }

    fn type_name() -> &'static str {
        "double-double"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_roundtrip_and_eps() {
        assert_eq!(<f64 as Scalar>::from_f64(1.5), 1.5);
        assert_eq!(<f64 as Scalar>::eps(), f64::EPSILON);
    }

    #[test]
    fn extended_is_more_precise_than_double() {
        // (1 + 2^-60) - 1 vanishes in f64 but survives in double-double.
        let tiny = Extended::from_f64(2.0f64.powi(-60));
        let x = Extended::one() + tiny;
        let back = x - Extended::one();
        assert!(back > Extended::zero());
        assert!(Extended::eps() < Extended::from_f64(1e-30));
    }

    #[test]
    fn extended_ln_sqrt_accuracy() {
        // ln(sqrt(e^2)) = 1 to double-double accuracy.
        let e2 = Extended::from_f64(1.0).exp() * Extended::from_f64(1.0).exp();
        let v = e2.sqrt().ln();
        let err = (v - Extended::one()).abs();
        assert!(err < Extended::from_f64(1e-30), "err = {:?}", err);
    }

    #[test]
    fn ln2_matches() {
        assert!((Scalar::ln2() as f64 - std::f64::consts::LN_2).abs() < 1e-15);
    }
}

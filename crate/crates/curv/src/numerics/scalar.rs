use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

/// Exact arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

/// Comparison tolerance used by the `f64` scalar.  Floating-point quantities
/// within this tolerance of each other (relative to magnitude) are treated as
/// equal; sign tests treat `|x| <= FLOAT_EPS` as zero.
pub const FLOAT_EPS: f64 = 1e-9;

/// Scalar field the library is generic over: exact rationals or `f64`.
///
/// The sign predicates are tolerance-aware for floats and exact for
/// rationals, so generic pivoting and feasibility code behaves sensibly in
/// both modes.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
{
    /// True when arithmetic is exact (no comparison tolerance).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// The fraction `num/den`; panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;
    /// Exact conversion from a float (rationals use the binary expansion).
    /// `None` for NaN/infinite input.
    fn from_f64(v: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self;
    fn recip(&self) -> Self;

    /// Zero test (`|x| <= FLOAT_EPS` for floats, exact for rationals).
    fn is_zero(&self) -> bool;
    /// Strictly positive beyond tolerance.
    fn is_positive(&self) -> bool;
    /// Strictly negative beyond tolerance.
    fn is_negative(&self) -> bool;
    /// Equality up to the scalar's tolerance (exact for rationals).
    fn approx_eq(&self, other: &Self) -> bool;

    /// Parse `"p/q"`, an integer, or a decimal literal.
    fn parse(text: &str) -> Option<Self>;
    /// JSON representation: a string `"p/q"` for rationals, a number for floats.
    fn to_json(&self) -> serde_json::Value;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(v: f64) -> Option<Self> {
        Rational::from_float(v)
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        num_traits::Signed::abs(self)
    }

    fn recip(&self) -> Self {
        Rational::recip(self)
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn is_positive(&self) -> bool {
        num_traits::Signed::is_positive(self)
    }

    fn is_negative(&self) -> bool {
        num_traits::Signed::is_negative(self)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if num_traits::Zero::is_zero(&den) {
                return None;
            }
            Some(Rational::new(num, den))
        } else if let Ok(n) = text.parse::<BigInt>() {
            Some(Rational::from_integer(n))
        } else {
            // Decimal literal: go through the exact binary value of the f64.
            let v: f64 = text.parse().ok()?;
            Rational::from_float(v)
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then_some(v)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn recip(&self) -> Self {
        1.0 / self
    }

    fn is_zero(&self) -> bool {
        f64::abs(*self) <= FLOAT_EPS
    }

    fn is_positive(&self) -> bool {
        *self > FLOAT_EPS
    }

    fn is_negative(&self) -> bool {
        *self < -FLOAT_EPS
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self - other).abs() <= FLOAT_EPS * (1.0 + f64::abs(*self).max(f64::abs(*other)))
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: f64 = num.trim().parse().ok()?;
            let den: f64 = den.trim().parse().ok()?;
            (den != 0.0).then(|| num / den)
        } else {
            text.parse().ok()
        }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self)
    }
}

//! Scalar abstractions.
//!
//! Floating-point code is written against [`Real`] (implemented for `f32` and
//! `f64`). The recurrence and coefficient identities of the linearized
//! operator are additionally checked in exact arithmetic, so the coefficient
//! tables are generic over [`Coefficient`], which also covers
//! `num_rational::Ratio`.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use num_rational::Ratio;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};
use rustfft::FftNum;

/// Floating-point scalar used by all numerical routines.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + FftNum
    + Default
    + Debug
    + Display
    + LowerExp
    + Sum
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    #[inline]
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("integer representable")
    }

    #[inline]
    fn of_i(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + FftNum
        + Default
        + Debug
        + Display
        + LowerExp
        + Sum
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Send
        + Sync
        + 'static
{
}

/// A field in which the operator coefficient tables can be built: floats for
/// numerics, rationals for exact identity checks.
pub trait Coefficient: Clone + PartialEq + Debug + Num + Neg<Output = Self> {
    /// The value `num / den`.
    fn ratio(num: i64, den: i64) -> Self;

    fn int(n: i64) -> Self {
        Self::ratio(n, 1)
    }
}

impl Coefficient for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Coefficient for f32 {
    fn ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }
}

impl Coefficient for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl Coefficient for Ratio<i128> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num as i128, den as i128)
    }
}

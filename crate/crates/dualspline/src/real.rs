//! Scalar abstraction used by every numerical routine in this crate.
//!
//! All spline arithmetic is written against [`Real`] so the same code runs
//! in `f32` or `f64`. The concrete aliases at the crate root pin `f64`,
//! which is what the reported tolerances assume.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar: `f32`, `f64`, or anything else that behaves like one.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Debug
    + Display
    + 'static
{
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum<Self>
        + Debug
        + Display
        + 'static
{
}

/// Lossy conversion from an `f64` literal into the working scalar.
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert into the scalar type")
}

/// Conversion of a count or index into the working scalar.
pub(crate) fn num<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("usize must convert into the scalar type")
}

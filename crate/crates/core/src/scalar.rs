//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar: `f32` or `f64`.
///
/// All routines are written against this trait. Double precision is the
/// working precision the tolerances in the verification suite assume;
/// `f32` works with correspondingly looser tolerances.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts a literal. Lossy for `f32`, never fails.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal is representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `1 - e^{-t}` for `t >= 0`, accurate for small `t`.
#[inline]
pub(crate) fn one_minus_exp_neg<T: Real>(t: T) -> T {
    -(-t).exp_m1()
}

/// `coth(u) - 1 = 2 / (e^{2u} - 1)` for `u > 0`, free of cancellation.
#[inline]
pub(crate) fn coth_minus_one<T: Real>(u: T) -> T {
    let two = T::lit(2.0);
    two / (two * u).exp_m1()
}

/// `coth(u)` for `u > 0`, written so that large `u` never forms `cosh`/`sinh`.
#[inline]
pub(crate) fn coth_pos<T: Real>(u: T) -> T {
    T::one() + coth_minus_one(u)
}

/// Odd extension of [`coth_pos`].
#[inline]
pub(crate) fn coth<T: Real>(u: T) -> T {
    if u < T::zero() {
        -coth_pos(-u)
    } else {
        coth_pos(u)
    }
}

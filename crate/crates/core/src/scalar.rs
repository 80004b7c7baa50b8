//! Scalar abstraction for the math core.
//!
//! Everything under [`crate::special`], [`crate::quad`], [`crate::dist`] and
//! [`crate::optimize`] is generic over [`Real`] so the closed forms and
//! quadrature run identically at f32 or f64 precision. The simulation layers
//! work in f64; aliases at the crate root pin that choice.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossless-enough conversion from an f64 literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in Real")
    }

    /// Conversion from a small integer count.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}

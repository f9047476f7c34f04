//! Floating-point scalar abstraction.
//!
//! All inexact arithmetic in this crate is generic over [`Scalar`], so the
//! linear algebra, protocol evaluation, and optimizer run at `f32` or `f64`.
//! Exact rational arithmetic (classical bounds) lives in [`crate::game`] and
//! does not go through this trait.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for objects constructed exactly (closed forms, retractions).
    fn strict_tol() -> Self;

    /// Tolerance for objects built from 4-5 digit decimal tables, where
    /// orthonormality only holds to the rounding level of the source data.
    fn printed_tol() -> Self;

    /// Conversion from `f64`, for tolerances and embedded decimal tables.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("value not representable in this scalar type")
    }

    /// Lossless-enough view as `f64`, for reporting and error messages.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn strict_tol() -> Self {
        1e-9
    }

    fn printed_tol() -> Self {
        5e-3
    }
}

impl Scalar for f32 {
    fn strict_tol() -> Self {
        1e-4
    }

    fn printed_tol() -> Self {
        5e-3
    }
}

/// Shorthand for a complex number with both parts converted from `f64`.
pub fn complex<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::real(re), T::real(im))
}

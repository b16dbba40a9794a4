//! Floating-point abstraction shared by every Gaussian-state computation.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar used throughout the crate: `f64` for production runs, `f32`
/// when memory or speed matters more than the last digits.
///
/// The tolerance constants are the numerical thresholds that decide
/// stability, degeneracy and physicality. They are per-type because an
/// `f32` computation cannot resolve the `f64` thresholds.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + nalgebra::Scalar
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// An eigenvalue of the dynamical matrix is purely imaginary when
    /// `|Re| < STABILITY_TOL * max(1, |Im|)`.
    const STABILITY_TOL: Self;
    /// Normal modes closer than this are treated as degenerate.
    const DEGENERACY_TOL: Self;
    /// Symplectic eigenvalues in `[1/2 - PHYSICALITY_TOL, 1/2)` are clamped to `1/2`.
    const PHYSICALITY_TOL: Self;

    /// Lossless conversion from a literal; every literal used in this crate is
    /// representable in both `f32` and `f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const STABILITY_TOL: Self = 1e-9;
    const DEGENERACY_TOL: Self = 1e-8;
    const PHYSICALITY_TOL: Self = 1e-9;
}

impl Real for f32 {
    const STABILITY_TOL: Self = 1e-4;
    const DEGENERACY_TOL: Self = 1e-4;
    const PHYSICALITY_TOL: Self = 1e-4;
}

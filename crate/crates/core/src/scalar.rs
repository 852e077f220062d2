//! Floating-point scalar abstraction.
//!
//! All numeric code in this crate is generic over [`Scalar`], so the same
//! kernels run at `f32` or `f64` precision. Tolerances are associated
//! constants because a sensible convergence threshold for `f64` is
//! meaningless noise for `f32`.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, ToPrimitive};

pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Max elementwise deviation tolerated when checking hermiticity,
    /// unit trace and channel completeness.
    const VALIDATION_TOL: Self;
    /// Eigenvalues in `[-PSD_TOL, 0)` are rounding noise and clamp to zero;
    /// anything below counts as genuinely negative.
    const PSD_TOL: Self;
    /// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
    const JACOBI_TOL: Self;
    /// Pure-state normalization tolerance.
    const NORM_TOL: Self;
    /// Jacobi sweep budget before giving up.
    const MAX_SWEEPS: usize = 100;

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 is representable in every Scalar")
    }

    fn complex(re: f64, im: f64) -> Complex<Self> {
        Complex::new(Self::of(re), Self::of(im))
    }
}

impl Scalar for f64 {
    const VALIDATION_TOL: Self = 1e-10;
    const PSD_TOL: Self = 1e-10;
    const JACOBI_TOL: Self = 1e-12;
    const NORM_TOL: Self = 1e-12;
}

impl Scalar for f32 {
    const VALIDATION_TOL: Self = 1e-5;
    const PSD_TOL: Self = 1e-5;
    const JACOBI_TOL: Self = 1e-6;
    const NORM_TOL: Self = 1e-6;
}

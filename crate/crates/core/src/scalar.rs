//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating point type the simulation is generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance for identities that hold exactly in real arithmetic.
    const EXACT_TOL: f64;
    /// Lower bound accepted for density-matrix eigenvalues (as `-EIGEN_TOL`).
    const EIGEN_TOL: f64;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const EXACT_TOL: f64 = 1e-12;
    const EIGEN_TOL: f64 = 1e-10;
}

impl Real for f32 {
    const EXACT_TOL: f64 = 1e-5;
    const EIGEN_TOL: f64 = 1e-5;
}

/// Tolerances used when validating constructed values.
///
/// `exact` bounds the max absolute entry deviation for unitarity, hermiticity,
/// normalization and trace checks. `eigen` bounds how negative a density-matrix
/// eigenvalue may be before the matrix is rejected as unphysical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericPolicy<T> {
    pub exact: T,
    pub eigen: T,
}

impl<T: Real> Default for NumericPolicy<T> {
    fn default() -> Self {
        Self {
            exact: T::lit(T::EXACT_TOL),
            eigen: T::lit(T::EIGEN_TOL),
        }
    }
}

impl<T: Real> NumericPolicy<T> {
    pub fn new(exact: T, eigen: T) -> Self {
        Self { exact, eigen }
    }
}

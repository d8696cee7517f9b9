use num_complex::Complex;

use super::linalg::{self, Mat4};
use super::state::{Outcome, Probabilities};
use super::unitary::{Unitary2, Unitary4};
use crate::error::{Error, Result};
use crate::scalar::{NumericPolicy, Real};

/// Two-qubit density matrix in the (CC, CD, DC, DD) basis.
///
/// Construction checks that the matrix is Hermitian, has unit trace and no
/// eigenvalue below `-policy.eigen`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4<T> {
    m: Mat4<T>,
}

impl<T: Real> DensityMatrix4<T> {
    pub fn new(entries: Mat4<T>) -> Result<Self> {
        Self::with_policy(entries, &NumericPolicy::default())
    }

    pub fn with_policy(entries: Mat4<T>, policy: &NumericPolicy<T>) -> Result<Self> {
        if !linalg::all_finite4(&entries) {
            return Err(Error::NonFinite("DensityMatrix4"));
        }
        let herm = linalg::max_abs_diff4(&entries, &linalg::dagger4(&entries));
        if herm > policy.exact {
            return Err(Error::NotHermitian {
                deviation: herm.as_f64(),
            });
        }
        let tr = linalg::trace4(&entries);
        if (tr - Complex::new(T::one(), T::zero())).norm() > policy.exact {
            return Err(Error::BadTrace { trace: tr.re.as_f64() });
        }
        let lowest = linalg::hermitian_eigenvalues4(&entries)[0];
        if lowest < -policy.eigen {
            return Err(Error::NegativeEigenvalue {
                eigenvalue: lowest.as_f64(),
            });
        }
        Ok(Self { m: entries })
    }

    pub(crate) fn from_entries_unchecked(m: Mat4<T>) -> Self {
        Self { m }
    }

    /// Diagonal matrix with the given populations.
    pub fn diagonal(p: [T; 4]) -> Result<Self> {
        let mut m = linalg::zero4();
        for (i, &v) in p.iter().enumerate() {
            m[i][i] = Complex::new(v, T::zero());
        }
        Self::new(m)
    }

    pub fn entries(&self) -> &Mat4<T> {
        &self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.m[row][col]
    }

    pub fn populations(&self) -> Probabilities<T> {
        Probabilities([self.m[0][0].re, self.m[1][1].re, self.m[2][2].re, self.m[3][3].re])
    }

    pub fn population(&self, o: Outcome) -> T {
        self.m[o.index()][o.index()].re
    }

    pub fn trace(&self) -> T {
        linalg::trace4(&self.m).re
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [T; 4] {
        linalg::hermitian_eigenvalues4(&self.m)
    }

    /// `U rho U^dagger`.
    pub fn evolve(&self, u: &Unitary4<T>) -> Self {
        let m = linalg::matmul4(&linalg::matmul4(u.entries(), &self.m), &linalg::dagger4(u.entries()));
        Self { m }
    }

    pub fn evolve_local(&self, alice: &Unitary2<T>, bob: &Unitary2<T>) -> Self {
        self.evolve(&super::tensor(alice, bob))
    }

    /// Multiply every off-diagonal entry by `factor`.
    pub fn damp_coherences(&self, factor: T) -> Self {
        let mut m = self.m;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, z) in row.iter_mut().enumerate() {
                if i != j {
                    *z = z.scale(factor);
                }
            }
        }
        Self { m }
    }

    /// `Re tr(O rho)` for a Hermitian observable `O`.
    pub fn expectation(&self, observable: &Mat4<T>) -> T {
        linalg::trace4(&linalg::matmul4(observable, &self.m)).re
    }

    pub fn trace_distance(&self, other: &Self) -> T {
        linalg::trace_distance4(&self.m, &other.m)
    }

    /// Clip negative eigenvalues to zero and rescale to unit trace.
    pub fn project_physical(entries: &Mat4<T>) -> Self {
        let clipped = linalg::hermitian_map4(entries, |x| x.max(T::zero()));
        let tr = linalg::trace4(&clipped).re;
        let mut m = clipped;
        if tr > T::zero() {
            m.iter_mut().flatten().for_each(|z| *z = z.unscale(tr));
        } else {
            m = linalg::identity4();
            m.iter_mut().flatten().for_each(|z| *z = z.unscale(T::lit(4.0)));
        }
        Self { m }
    }
}

#[cfg(test)]
mod tests {
    use super::super::unitary::c;
    use super::*;

    #[test]
    fn diagonal_construction_and_populations() {
        let rho = DensityMatrix4::diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(rho.populations().0, [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(rho.trace(), 1.0);
    }

    #[test]
    fn rejects_bad_trace_and_negative_eigenvalue() {
        assert!(matches!(
            DensityMatrix4::diagonal([0.5, 0.0, 0.0, 0.0]),
            Err(Error::BadTrace { .. })
        ));
        assert!(matches!(
            DensityMatrix4::diagonal([1.2, -0.2, 0.0, 0.0]),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = linalg::zero4::<f64>();
        m[0][0] = c(1.0, 0.0);
        m[0][1] = c(0.1, 0.0);
        assert!(matches!(DensityMatrix4::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn projection_clips_and_renormalizes() {
        let mut m = linalg::zero4::<f64>();
        m[0][0] = c(1.1, 0.0);
        m[1][1] = c(-0.1, 0.0);
        let rho = DensityMatrix4::project_physical(&m);
        let p = rho.populations();
        assert!((p.cc() - 1.0).abs() < 1e-14);
        assert!(p.cd().abs() < 1e-14);
        assert!(rho.eigenvalues()[0] >= -1e-14);
    }
}

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::{self, Mat4};
use crate::error::{Error, Result};
use crate::scalar::{NumericPolicy, Real};

type Mat2<T> = [[Complex<T>; 2]; 2];

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// A 2x2 unitary acting on one player's qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2<T> {
    m: Mat2<T>,
}

impl<T: Real> Unitary2<T> {
    pub fn new(entries: [[Complex<T>; 2]; 2]) -> Result<Self> {
        Self::with_policy(entries, &NumericPolicy::default())
    }

    pub fn with_policy(entries: [[Complex<T>; 2]; 2], policy: &NumericPolicy<T>) -> Result<Self> {
        if !entries.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("Unitary2"));
        }
        let u = Self { m: entries };
        let deviation = u.unitarity_deviation();
        if deviation > policy.exact {
            return Err(Error::NotUnitary {
                what: "Unitary2",
                deviation: deviation.as_f64(),
            });
        }
        Ok(u)
    }

    /// Skips validation; only for matrices that are unitary by construction.
    pub(crate) fn from_entries_unchecked(m: Mat2<T>) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self { m: [[c(o, z), c(z, z)], [c(z, z), c(o, z)]] }
    }

    /// `exp(-i angle/2 (n . sigma))` for a unit axis `n`.
    pub fn rotation(axis: [T; 3], angle: T) -> Self {
        let half = angle / T::lit(2.0);
        let (s, co) = half.sin_cos();
        let [nx, ny, nz] = axis;
        // cos I - i sin (nx X + ny Y + nz Z)
        Self {
            m: [
                [c(co, -s * nz), c(-s * ny, -s * nx)],
                [c(s * ny, -s * nx), c(co, s * nz)],
            ],
        }
    }

    pub fn entries(&self) -> &Mat2<T> {
        &self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.m[row][col]
    }

    pub fn dagger(&self) -> Self {
        let m = &self.m;
        Self {
            m: [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.m, &other.m);
        let mut out = [[c(T::zero(), T::zero()); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self { m: out }
    }

    pub fn unitarity_deviation(&self) -> T {
        let p = self.mul(&self.dagger());
        let mut worst = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((p.m[i][j] - c(target, T::zero())).norm());
            }
        }
        worst
    }
}

/// A 4x4 unitary on the two-qubit space, basis order (CC, CD, DC, DD).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary4<T> {
    m: Mat4<T>,
}

impl<T: Real> Unitary4<T> {
    pub fn new(entries: Mat4<T>) -> Result<Self> {
        Self::with_policy(entries, &NumericPolicy::default())
    }

    pub fn with_policy(entries: Mat4<T>, policy: &NumericPolicy<T>) -> Result<Self> {
        if !linalg::all_finite4(&entries) {
            return Err(Error::NonFinite("Unitary4"));
        }
        let u = Self { m: entries };
        let deviation = u.unitarity_deviation();
        if deviation > policy.exact {
            return Err(Error::NotUnitary {
                what: "Unitary4",
                deviation: deviation.as_f64(),
            });
        }
        Ok(u)
    }

    pub(crate) fn from_entries_unchecked(m: Mat4<T>) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self { m: linalg::identity4() }
    }

    pub fn entries(&self) -> &Mat4<T> {
        &self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.m[row][col]
    }

    pub fn dagger(&self) -> Self {
        Self { m: linalg::dagger4(&self.m) }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Self {
        Self { m: linalg::matmul4(&self.m, &other.m) }
    }

    pub fn scale_phase(&self, phase: T) -> Self {
        let f = Complex::from_polar(T::one(), phase);
        let mut m = self.m;
        m.iter_mut().flatten().for_each(|z| *z = *z * f);
        Self { m }
    }

    pub fn unitarity_deviation(&self) -> T {
        let p = linalg::matmul4(&self.m, &linalg::dagger4(&self.m));
        linalg::max_abs_diff4(&p, &linalg::identity4())
    }

    /// Haar-distributed random unitary (Gram-Schmidt on a complex Gaussian matrix).
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut cols: Vec<[Complex<T>; 4]> = Vec::with_capacity(4);
        while cols.len() < 4 {
            let mut v = [c(T::zero(), T::zero()); 4];
            for z in v.iter_mut() {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                *z = c(T::lit(re), T::lit(im));
            }
            for prev in &cols {
                let overlap = (0..4).fold(c(T::zero(), T::zero()), |acc, k| acc + prev[k].conj() * v[k]);
                for k in 0..4 {
                    v[k] = v[k] - prev[k] * overlap;
                }
            }
            let norm = v.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
            if norm < T::lit(1e-3) {
                continue;
            }
            v.iter_mut().for_each(|z| *z = z.unscale(norm));
            cols.push(v);
        }
        let mut m = linalg::zero4();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..4 {
                m[i][j] = col[i];
            }
        }
        Self { m }
    }
}

/// Kronecker product with `a` on Alice's (left, most significant) qubit.
pub fn tensor<T: Real>(a: &Unitary2<T>, b: &Unitary2<T>) -> Unitary4<T> {
    let mut m = linalg::zero4();
    for i in 0..2 {
        for j in 0..2 {
            let aij = a.m[i][j];
            for k in 0..2 {
                for l in 0..2 {
                    m[2 * i + k][2 * j + l] = aij * b.m[k][l];
                }
            }
        }
    }
    Unitary4 { m }
}

/// `|tr(a^dagger b)| / 4`; equals 1 exactly when `a` and `b` differ by a global phase.
pub fn fidelity_up_to_phase<T: Real>(a: &Unitary4<T>, b: &Unitary4<T>) -> T {
    let mut tr = c(T::zero(), T::zero());
    for i in 0..4 {
        for k in 0..4 {
            tr = tr + a.m[k][i].conj() * b.m[k][i];
        }
    }
    (tr.norm() / T::lit(4.0)).min(T::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defect() -> Unitary2<f64> {
        let (o, z) = (1.0, 0.0);
        Unitary2::new([[c(z, z), c(o, z)], [c(-o, z), c(z, z)]]).unwrap()
    }

    #[test]
    fn identity_tensor_identity_is_identity() {
        let u = tensor(&Unitary2::<f64>::identity(), &Unitary2::identity());
        assert_eq!(u, Unitary4::identity());
    }

    #[test]
    fn defect_tensor_defect_is_signed_antidiagonal() {
        // Hand product of [[0,1],[-1,0]] with itself: rows map to columns 3,2,1,0
        // with signs (+1, -1, -1, +1).
        let dd = tensor(&defect(), &defect());
        let expected = [1.0, -1.0, -1.0, 1.0];
        for row in 0..4 {
            for col in 0..4 {
                let want = if row + col == 3 { expected[row] } else { 0.0 };
                assert_eq!(dd.get(row, col), c(want, 0.0), "({row},{col})");
            }
        }
    }

    #[test]
    fn defect_on_alice_flips_left_qubit() {
        let u = tensor(&defect(), &Unitary2::identity());
        // Column 0 is the image of |CC>.
        assert_eq!(u.get(2, 0).norm(), 1.0);
        assert_eq!(u.get(0, 0).norm() + u.get(1, 0).norm() + u.get(3, 0).norm(), 0.0);
    }

    #[test]
    fn fidelity_examples() {
        let id = Unitary4::<f64>::identity();
        assert!((fidelity_up_to_phase(&id, &id) - 1.0).abs() < 1e-15);
        let phased = id.scale_phase(std::f64::consts::PI / 7.0);
        assert!((fidelity_up_to_phase(&id, &phased) - 1.0).abs() < 1e-15);
        let dd = tensor(&defect(), &defect());
        assert_eq!(fidelity_up_to_phase(&id, &dd), 0.0);
    }

    #[test]
    fn rejects_non_unitary_and_non_finite() {
        let z = c(0.0, 0.0);
        let bad = [[c(2.0, 0.0), z], [z, c(1.0, 0.0)]];
        assert!(matches!(Unitary2::new(bad), Err(Error::NotUnitary { .. })));
        let nan = [[c(f64::NAN, 0.0), z], [z, c(1.0, 0.0)]];
        assert!(matches!(Unitary2::new(nan), Err(Error::NonFinite(_))));
    }

    #[test]
    fn rotation_about_y_by_pi_is_minus_defect() {
        let r = Unitary2::<f64>::rotation([0.0, 1.0, 0.0], std::f64::consts::PI);
        let d = defect();
        for i in 0..2 {
            for j in 0..2 {
                assert!((r.get(i, j) + d.get(i, j)).norm() < 1e-15);
            }
        }
    }
}

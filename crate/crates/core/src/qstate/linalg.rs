//! Dense helpers for the fixed, tiny matrices used in this crate.
//!
//! Everything here is O(n^3) on n <= 16, so a cyclic Jacobi sweep is both
//! accurate and fast enough.

use num_complex::Complex;

use crate::scalar::Real;

pub type Mat4<T> = [[Complex<T>; 4]; 4];

pub fn zero4<T: Real>() -> Mat4<T> {
    [[Complex::new(T::zero(), T::zero()); 4]; 4]
}

pub fn identity4<T: Real>() -> Mat4<T> {
    let mut m = zero4();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex::new(T::one(), T::zero());
    }
    m
}

pub fn matmul4<T: Real>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    let mut out = zero4();
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            for j in 0..4 {
                out[i][j] = out[i][j] + aik * b[k][j];
            }
        }
    }
    out
}

pub fn dagger4<T: Real>(a: &Mat4<T>) -> Mat4<T> {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn max_abs_diff4<T: Real>(a: &Mat4<T>, b: &Mat4<T>) -> T {
    let mut worst = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((a[i][j] - b[i][j]).norm());
        }
    }
    worst
}

pub fn trace4<T: Real>(a: &Mat4<T>) -> Complex<T> {
    (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + a[i][i])
}

pub fn all_finite4<T: Real>(a: &Mat4<T>) -> bool {
    a.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Eigen-decomposition of a real symmetric `n x n` matrix (row-major).
///
/// Returns eigenvalues in ascending order together with the matching
/// eigenvectors stored as columns of a row-major `n x n` matrix.
pub fn symmetric_eigen<T: Real>(a: &[T], n: usize) -> (Vec<T>, Vec<T>) {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let mut m = a.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let scale = m.iter().fold(T::zero(), |acc, x| acc + *x * *x).sqrt();
    let target = T::epsilon() * T::epsilon() * scale * scale;

    for _sweep in 0..100 {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off + m[p * n + q] * m[p * n + q];
            }
        }
        if off <= target || off == T::zero() {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (apq + apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].partial_cmp(&m[j * n + j]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| m[i * n + i]).collect();
    let mut vectors = vec![T::zero(); n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }
    (values, vectors)
}

// Real 8x8 image of a 4x4 Hermitian matrix A + iB: [[A, -B], [B, A]].
// Every eigenvalue of the Hermitian matrix appears twice in the image.
fn embed<T: Real>(h: &Mat4<T>) -> Vec<T> {
    let mut out = vec![T::zero(); 64];
    for i in 0..4 {
        for j in 0..4 {
            let Complex { re, im } = h[i][j];
            out[i * 8 + j] = re;
            out[(i + 4) * 8 + (j + 4)] = re;
            out[(i + 4) * 8 + j] = im;
            out[i * 8 + (j + 4)] = -im;
        }
    }
    out
}

/// Eigenvalues (ascending) of a Hermitian 4x4 matrix. Only the Hermitian part
/// of `h` is used.
pub fn hermitian_eigenvalues4<T: Real>(h: &Mat4<T>) -> [T; 4] {
    let (values, _) = symmetric_eigen(&embed(&hermitize(h)), 8);
    [values[0], values[2], values[4], values[6]]
}

/// Apply `f` to the spectrum of a Hermitian 4x4 matrix.
pub fn hermitian_map4<T: Real>(h: &Mat4<T>, f: impl Fn(T) -> T) -> Mat4<T> {
    let (values, vectors) = symmetric_eigen(&embed(&hermitize(h)), 8);
    let mapped: Vec<T> = values.iter().map(|&x| f(x)).collect();
    let mut full = vec![T::zero(); 64];
    for i in 0..8 {
        for j in 0..8 {
            let mut acc = T::zero();
            for k in 0..8 {
                acc = acc + vectors[i * 8 + k] * mapped[k] * vectors[j * 8 + k];
            }
            full[i * 8 + j] = acc;
        }
    }
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            let re = (full[i * 8 + j] + full[(i + 4) * 8 + (j + 4)]) / T::lit(2.0);
            let im = (full[(i + 4) * 8 + j] - full[i * 8 + (j + 4)]) / T::lit(2.0);
            out[i][j] = Complex::new(re, im);
        }
    }
    out
}

fn hermitize<T: Real>(h: &Mat4<T>) -> Mat4<T> {
    let half = T::lit(0.5);
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (h[i][j] + h[j][i].conj()).scale(half);
        }
    }
    out
}

/// Trace norm distance `0.5 * sum |eig(a - b)|` between two Hermitian matrices.
pub fn trace_distance4<T: Real>(a: &Mat4<T>, b: &Mat4<T>) -> T {
    let mut diff = zero4();
    for i in 0..4 {
        for j in 0..4 {
            diff[i][j] = a[i][j] - b[i][j];
        }
    }
    let eig = hermitian_eigenvalues4(&diff);
    eig.iter().fold(T::zero(), |acc, x| acc + x.abs()) / T::lit(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_diagonalizes_known_matrix() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let (vals, vecs) = symmetric_eigen::<f64>(&[2.0, 1.0, 1.0, 2.0], 2);
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 3.0).abs() < 1e-14);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((vecs[0].abs() - s).abs() < 1e-14);
        assert!((vecs[2].abs() - s).abs() < 1e-14);
    }

    #[test]
    fn hermitian_eigenvalues_of_pauli_y_tensor() {
        // sigma_y (x) I has eigenvalues -1, -1, 1, 1.
        let i = Complex::new(0.0, 1.0);
        let mut m = zero4::<f64>();
        m[0][2] = -i;
        m[1][3] = -i;
        m[2][0] = i;
        m[3][1] = i;
        let eig = hermitian_eigenvalues4(&m);
        for (got, want) in eig.iter().zip([-1.0, -1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-13, "{eig:?}");
        }
    }

    #[test]
    fn spectral_map_identity_round_trip() {
        let i = Complex::new(0.0, 0.3);
        let mut m = identity4::<f64>();
        m[0][1] = Complex::new(0.2, 0.0) + i;
        m[1][0] = Complex::new(0.2, 0.0) - i;
        let back = hermitian_map4(&m, |x| x);
        assert!(max_abs_diff4(&m, &back) < 1e-13);
    }
}

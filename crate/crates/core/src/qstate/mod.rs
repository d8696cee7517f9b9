//! One- and two-qubit linear algebra.
//!
//! The two-qubit basis is always ordered (CC, CD, DC, DD): Alice's qubit is the
//! left, most significant factor of every tensor product.

mod density;
pub mod linalg;
mod state;
mod unitary;

pub use density::DensityMatrix4;
pub use num_complex::Complex;
pub use state::{apply, density_from_state, probabilities, Outcome, Probabilities, StateVector4};
pub use unitary::{fidelity_up_to_phase, tensor, Unitary2, Unitary4};

pub(crate) use unitary::c;

/// Pauli matrices in the order (I, X, Y, Z).
pub fn pauli<T: crate::Real>(index: usize) -> [[Complex<T>; 2]; 2] {
    let (o, z) = (T::one(), T::zero());
    match index {
        0 => [[c(o, z), c(z, z)], [c(z, z), c(o, z)]],
        1 => [[c(z, z), c(o, z)], [c(o, z), c(z, z)]],
        2 => [[c(z, z), c(z, -o)], [c(z, o), c(z, z)]],
        3 => [[c(o, z), c(z, z)], [c(z, z), c(-o, z)]],
        _ => panic!("pauli index {index} out of range"),
    }
}

/// Kronecker product of two arbitrary 2x2 complex matrices.
pub fn kron2<T: crate::Real>(a: &[[Complex<T>; 2]; 2], b: &[[Complex<T>; 2]; 2]) -> linalg::Mat4<T> {
    let mut m = linalg::zero4();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn u2(theta: f64, phi: f64, lambda: f64) -> Unitary2<f64> {
        // Generic SU(2)-times-phase parameterization.
        let (s, co) = (theta / 2.0).sin_cos();
        Unitary2::new([
            [Complex::from_polar(co, phi), Complex::from_polar(s, lambda)],
            [-Complex::from_polar(s, -lambda), Complex::from_polar(co, -phi)],
        ])
        .unwrap()
    }

    proptest! {
        #[test]
        fn tensor_of_unitaries_is_unitary(
            a in 0.0..6.3f64, b in 0.0..6.3f64, cc in 0.0..6.3f64,
            d in 0.0..6.3f64, e in 0.0..6.3f64, f in 0.0..6.3f64,
        ) {
            let u = tensor(&u2(a, b, cc), &u2(d, e, f));
            prop_assert!(u.unitarity_deviation() <= 1e-12);
        }

        #[test]
        fn apply_preserves_norm_and_probabilities_sum(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = Unitary4::<f64>::random(&mut rng);
            let s = StateVector4::<f64>::random(&mut rng);
            let out = apply(&u, &s);
            prop_assert!((out.norm_sqr() - 1.0).abs() <= 1e-12);
            prop_assert!((probabilities(&out).total() - 1.0).abs() <= 1e-12);
            prop_assert!((fidelity_up_to_phase(&u, &u) - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn pure_density_is_rank_one(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = StateVector4::<f64>::random(&mut rng);
            let rho = density_from_state(&s);
            let eig = rho.eigenvalues();
            prop_assert!(eig[2].abs() <= 1e-10);
            prop_assert!((rho.trace() - 1.0).abs() <= 1e-12);
            prop_assert!(DensityMatrix4::new(*rho.entries()).is_ok());
            let p = probabilities(&s);
            for (i, o) in Outcome::ALL.iter().enumerate() {
                prop_assert!((rho.population(*o) - p.0[i]).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let u = Unitary4::<f64>::random(&mut rng);
            assert!(u.unitarity_deviation() < 1e-12);
            assert!(Unitary4::new(*u.entries()).is_ok());
        }
    }

    #[test]
    fn works_in_single_precision() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = Unitary4::<f32>::random(&mut rng);
        let s = apply(&u, &StateVector4::<f32>::cc());
        assert!((s.norm_sqr() - 1.0).abs() < 1e-5);
    }
}

// Cross-checks against nalgebra's matrix exponential and Hermitian eigensolver.

use approx::assert_relative_eq;
use nalgebra::{Complex, Matrix4};
use qdilemma::game::{entangling_gate, sweep_gammas, EntanglementParam};
use qdilemma::nmr::{sequence_unitary, NoiseModel, PulsePrimitive, PulseSequence, SpinSystem};
use qdilemma::qstate::{kron2, pauli, DensityMatrix4, StateVector4, Unitary4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn na(m: &[[Complex<f64>; 4]; 4]) -> Matrix4<Complex<f64>> {
    Matrix4::from_fn(|i, j| m[i][j])
}

fn assert_close(u: &Unitary4<f64>, expect: &Matrix4<Complex<f64>>) {
    for i in 0..4 {
        for j in 0..4 {
            assert_relative_eq!(u.get(i, j).re, expect[(i, j)].re, epsilon = 1e-12);
            assert_relative_eq!(u.get(i, j).im, expect[(i, j)].im, epsilon = 1e-12);
        }
    }
}

#[test]
fn entangler_is_exponential_of_yy() {
    let yy = na(&kron2(&pauli::<f64>(2), &pauli(2)));
    for g in sweep_gammas::<f64>() {
        let expect = (yy * Complex::new(0.0, -g.gamma() / 2.0)).exp();
        assert_close(&entangling_gate(g), &expect);
    }
}

#[test]
fn free_evolution_is_exponential_of_zz() {
    let zz = na(&kron2(&pauli::<f64>(3), &pauli(3)));
    let sys = SpinSystem::<f64>::default();
    for t in [0.0, 0.013, 1.0 / (2.0 * 7.17), 0.2] {
        let seq = PulseSequence::new("d", vec![PulsePrimitive::delay(t)]).unwrap();
        let u = sequence_unitary(&seq, &sys, &NoiseModel::noiseless()).unwrap();
        let expect = (zz * Complex::new(0.0, -std::f64::consts::PI * 7.17 / 2.0 * t)).exp();
        assert_close(&u, &expect);
    }
}

#[test]
fn density_spectrum_matches_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..50 {
        let mut m = [[Complex::new(0.0, 0.0); 4]; 4];
        let weights: Vec<f64> = (0..3).map(|_| rng.random::<f64>()).collect();
        let total: f64 = weights.iter().sum();
        for w in weights {
            let a = *StateVector4::<f64>::random(&mut rng).amplitudes();
            for i in 0..4 {
                for j in 0..4 {
                    m[i][j] += a[i] * a[j].conj() * (w / total);
                }
            }
        }
        let rho = DensityMatrix4::new(m).unwrap();
        let mut expect: Vec<f64> = na(&m).symmetric_eigenvalues().iter().copied().collect();
        expect.sort_by(f64::total_cmp);
        for (got, want) in rho.eigenvalues().iter().zip(&expect) {
            assert_relative_eq!(*got, *want, epsilon = 1e-10);
        }
    }
}

#[test]
fn maximal_entangler_on_cc() {
    let u = entangling_gate(EntanglementParam::<f64>::maximal());
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert_relative_eq!(u.get(0, 0).re, h, epsilon = 1e-15);
    assert_relative_eq!(u.get(3, 0).im, h, epsilon = 1e-15);
}

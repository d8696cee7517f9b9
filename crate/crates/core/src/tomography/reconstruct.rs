use super::{pauli_label, pauli_product, MeasurementRecord, Observable, ReadoutSetting};
use crate::error::{Error, Result};
use crate::qstate::linalg::{self, Mat4};
use crate::qstate::{c, DensityMatrix4};
use crate::scalar::Real;

const PARAMS: usize = 15;

/// Pauli index pairs of the traceless part, `(I,X) .. (Z,Z)`.
fn directions() -> impl Iterator<Item = (usize, usize)> {
    (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).skip(1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionResult<T> {
    pub rho_hat: DensityMatrix4<T>,
    /// Euclidean norm of the least-squares residual of the unprojected fit.
    pub residual_norm: T,
    /// Whether negative eigenvalues were clipped.
    pub projected: bool,
}

/// Linear model `value = offset + row . c` of one reading.
fn design_row<T: Real>(setting: ReadoutSetting, o: Observable) -> (T, [T; PARAMS]) {
    let op = o.effective_operator::<T>(setting);
    let quarter = T::lit(0.25);
    let offset = linalg::trace4(&op).re * quarter;
    let mut row = [T::zero(); PARAMS];
    for (k, (a, b)) in directions().enumerate() {
        row[k] = linalg::trace4(&linalg::matmul4(&op, &pauli_product(a, b))).re * quarter;
    }
    (offset, row)
}

struct Normal<T> {
    eigenvalues: Vec<T>,
    eigenvectors: Vec<T>,
    rank: usize,
}

impl<T: Real> Normal<T> {
    fn new(rows: &[[T; PARAMS]]) -> Self {
        let mut m = vec![T::zero(); PARAMS * PARAMS];
        for r in rows {
            for i in 0..PARAMS {
                for j in 0..PARAMS {
                    m[i * PARAMS + j] = m[i * PARAMS + j] + r[i] * r[j];
                }
            }
        }
        let (eigenvalues, eigenvectors) = linalg::symmetric_eigen(&m, PARAMS);
        let largest = eigenvalues.iter().fold(T::zero(), |acc, &l| acc.max(l));
        let cut = largest * T::lit(T::EIGEN_TOL);
        let rank = eigenvalues.iter().filter(|&&l| l > cut).count();
        Self { eigenvalues, eigenvectors, rank }
    }

    fn vector(&self, k: usize) -> impl Iterator<Item = T> + '_ {
        (0..PARAMS).map(move |r| self.eigenvectors[r * PARAMS + k])
    }

    /// Pauli labels that dominate the null space.
    fn unconstrained(&self) -> Vec<String> {
        let mut out = Vec::new();
        let null = PARAMS - self.rank;
        for k in 0..null {
            for (comp, (a, b)) in self.vector(k).zip(directions()) {
                if comp.abs() > T::lit(0.1) {
                    out.push(pauli_label(a, b));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Rank of the 15-parameter design spanned by `settings`, with the Pauli
/// directions it leaves unconstrained.
pub fn design_rank(settings: &[ReadoutSetting]) -> (usize, Vec<String>) {
    let rows: Vec<[f64; PARAMS]> = settings
        .iter()
        .flat_map(|&s| Observable::ALL.into_iter().map(move |o| design_row::<f64>(s, o).1))
        .collect();
    let normal = Normal::new(&rows);
    (normal.rank, normal.unconstrained())
}

/// Least-squares density matrix over Hermitian unit-trace matrices.
pub fn reconstruct<T: Real>(records: &[MeasurementRecord<T>]) -> Result<ReconstructionResult<T>> {
    let mut rows = Vec::new();
    let mut targets = Vec::new();
    for rec in records {
        for &(o, v) in &rec.values {
            if !v.is_finite() {
                return Err(Error::NonFinite("measurement record"));
            }
            let (offset, row) = design_row::<T>(rec.setting, o);
            rows.push(row);
            targets.push(v - offset);
        }
    }
    let normal = Normal::new(&rows);
    if normal.rank < PARAMS {
        return Err(Error::RankDeficient {
            rank: normal.rank,
            directions: normal.unconstrained(),
        });
    }

    let mut rhs = [T::zero(); PARAMS];
    for (row, &y) in rows.iter().zip(&targets) {
        for i in 0..PARAMS {
            rhs[i] = rhs[i] + row[i] * y;
        }
    }
    let mut coef = [T::zero(); PARAMS];
    for k in 0..PARAMS {
        let proj = normal.vector(k).zip(rhs).fold(T::zero(), |acc, (u, r)| acc + u * r) / normal.eigenvalues[k];
        for (ci, u) in coef.iter_mut().zip(normal.vector(k)) {
            *ci = *ci + proj * u;
        }
    }

    let residual_norm = rows
        .iter()
        .zip(&targets)
        .map(|(row, &y)| {
            let fit = row.iter().zip(coef).fold(T::zero(), |acc, (&a, x)| acc + a * x);
            (fit - y) * (fit - y)
        })
        .fold(T::zero(), |acc, x| acc + x)
        .sqrt();

    let mut m: Mat4<T> = linalg::identity4();
    m.iter_mut().flatten().for_each(|z| *z = z.scale(T::lit(0.25)));
    for ((a, b), x) in directions().zip(coef) {
        let p = pauli_product::<T>(a, b);
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = m[i][j] + p[i][j] * c(x * T::lit(0.25), T::zero());
            }
        }
    }
    let lowest = linalg::hermitian_eigenvalues4(&m)[0];
    let projected = lowest < -T::lit(T::EIGEN_TOL);
    let rho_hat = if projected {
        DensityMatrix4::project_physical(&m)
    } else {
        DensityMatrix4::from_entries_unchecked(m)
    };
    Ok(ReconstructionResult { rho_hat, residual_norm, projected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{entangling_gate, EntanglementParam};
    use crate::qstate::{apply, density_from_state, StateVector4};
    use crate::tomography::{simulate_all, ReadoutRotation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn full_design_has_full_rank() {
        assert_eq!(design_rank(&ReadoutSetting::all()), (15, vec![]));
    }

    #[test]
    fn missing_settings_name_directions() {
        use ReadoutRotation::*;
        let settings: Vec<_> = ReadoutSetting::all().into_iter().filter(|s| s.bob == None).collect();
        let (rank, dirs) = design_rank(&settings);
        assert!(rank < 15);
        assert!(dirs.contains(&"IX".to_string()) && dirs.contains(&"XY".to_string()), "{dirs:?}");
        assert!(!dirs.contains(&"ZZ".to_string()));

        let rho = DensityMatrix4::diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        let recs: Vec<_> = simulate_all(&rho, 0.0, 1)
            .unwrap()
            .into_iter()
            .filter(|r| r.setting.bob == None)
            .collect();
        let err = reconstruct(&recs).unwrap_err();
        assert!(matches!(err, Error::RankDeficient { .. }));
        assert!(err.to_string().contains("XY"), "{err}");
    }

    #[test]
    fn noiseless_round_trips() {
        let rho = DensityMatrix4::diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        let r = reconstruct(&simulate_all(&rho, 0.0, 0).unwrap()).unwrap();
        assert!(linalg::max_abs_diff4(r.rho_hat.entries(), rho.entries()) < 1e-9);
        assert!(r.residual_norm < 1e-9);

        let s = apply(&entangling_gate(EntanglementParam::<f64>::maximal()), &StateVector4::cc());
        let rho = density_from_state(&s);
        let r = reconstruct(&simulate_all(&rho, 0.0, 0).unwrap()).unwrap();
        assert!((r.rho_hat.get(0, 3).im + 0.5).abs() < 1e-9, "{:?}", r.rho_hat.get(0, 3));
        assert!((r.rho_hat.get(3, 0).im - 0.5).abs() < 1e-9);
        assert!(linalg::max_abs_diff4(r.rho_hat.entries(), rho.entries()) < 1e-9);
    }

    #[test]
    fn random_pure_states_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let rho = density_from_state(&StateVector4::<f64>::random(&mut rng));
            let r = reconstruct(&simulate_all(&rho, 0.0, 0).unwrap()).unwrap();
            assert!(r.rho_hat.trace_distance(&rho) <= 1e-8);
        }
    }

    #[test]
    fn noisy_fit_is_physical_and_improves_with_less_noise() {
        let s = apply(&entangling_gate(EntanglementParam::new(0.7).unwrap()), &StateVector4::cc());
        let rho = density_from_state(&s);
        let mean = |sigma: f64| {
            let mut total = 0.0;
            for seed in 0..100 {
                let r = reconstruct(&simulate_all(&rho, sigma, seed).unwrap()).unwrap();
                assert!((r.rho_hat.trace() - 1.0).abs() < 1e-12);
                assert!(r.rho_hat.eigenvalues()[0] >= -1e-10);
                let p = r.rho_hat.populations();
                assert!((p.total() - 1.0).abs() < 1e-12);
                total += r.rho_hat.trace_distance(&rho);
            }
            total / 100.0
        };
        let (wide, narrow) = (mean(0.02), mean(0.01));
        assert!(wide.is_finite() && narrow < wide, "{narrow} vs {wide}");
    }
}

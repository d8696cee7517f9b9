//! Nine-setting readout of a two-spin state and least-squares reconstruction.

mod reconstruct;
mod records;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub use reconstruct::{design_rank, reconstruct, ReconstructionResult};
pub use records::{parse_records, write_records};

use crate::error::{Error, Result};
use crate::game::PayoffTable;
use crate::nmr::Experiment;
use crate::qstate::linalg::{self, Mat4};
use crate::qstate::{c, kron2, pauli, tensor, DensityMatrix4, Unitary2, Unitary4};
use crate::scalar::Real;

/// Pre-readout rotation applied to one spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReadoutRotation {
    None,
    X90,
    Y90,
}

impl ReadoutRotation {
    pub const ALL: [ReadoutRotation; 3] = [ReadoutRotation::None, ReadoutRotation::X90, ReadoutRotation::Y90];

    pub fn name(self) -> &'static str {
        match self {
            ReadoutRotation::None => "none",
            ReadoutRotation::X90 => "x90",
            ReadoutRotation::Y90 => "y90",
        }
    }

    pub fn unitary<T: Real>(self) -> Unitary2<T> {
        let (o, z) = (T::one(), T::zero());
        let quarter = T::FRAC_PI_2();
        match self {
            ReadoutRotation::None => Unitary2::identity(),
            ReadoutRotation::X90 => Unitary2::rotation([o, z, z], quarter),
            ReadoutRotation::Y90 => Unitary2::rotation([z, o, z], quarter),
        }
    }
}

impl FromStr for ReadoutRotation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown readout rotation {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReadoutSetting {
    pub alice: ReadoutRotation,
    pub bob: ReadoutRotation,
}

impl ReadoutSetting {
    pub fn new(alice: ReadoutRotation, bob: ReadoutRotation) -> Self {
        Self { alice, bob }
    }

    /// The nine settings, Alice's rotation varying slowest.
    pub fn all() -> Vec<ReadoutSetting> {
        ReadoutRotation::ALL
            .into_iter()
            .flat_map(|a| ReadoutRotation::ALL.into_iter().map(move |b| ReadoutSetting::new(a, b)))
            .collect()
    }

    /// Position in [`ReadoutSetting::all`].
    pub fn index(self) -> usize {
        let pos = |r| ReadoutRotation::ALL.iter().position(|x| *x == r).unwrap_or(0);
        3 * pos(self.alice) + pos(self.bob)
    }

    pub fn unitary<T: Real>(self) -> Unitary4<T> {
        tensor(&self.alice.unitary(), &self.bob.unitary())
    }
}

impl fmt::Display for ReadoutSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.alice.name(), self.bob.name())
    }
}

impl FromStr for ReadoutSetting {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("setting {s:?} is not alice:bob"))?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

/// Quantity read out after the setting's rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observable {
    PopCC,
    PopCD,
    PopDC,
    PopDD,
    ZAlice,
    ZBob,
}

impl Observable {
    pub const ALL: [Observable; 6] = [
        Observable::PopCC,
        Observable::PopCD,
        Observable::PopDC,
        Observable::PopDD,
        Observable::ZAlice,
        Observable::ZBob,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::PopCC => "P_CC",
            Observable::PopCD => "P_CD",
            Observable::PopDC => "P_DC",
            Observable::PopDD => "P_DD",
            Observable::ZAlice => "Z_A",
            Observable::ZBob => "Z_B",
        }
    }

    /// Operator in the computational basis.
    pub fn operator<T: Real>(self) -> Mat4<T> {
        let diag = |d: [f64; 4]| {
            let mut m = linalg::zero4::<T>();
            for (i, v) in d.into_iter().enumerate() {
                m[i][i] = c(T::lit(v), T::zero());
            }
            m
        };
        match self {
            Observable::PopCC => diag([1.0, 0.0, 0.0, 0.0]),
            Observable::PopCD => diag([0.0, 1.0, 0.0, 0.0]),
            Observable::PopDC => diag([0.0, 0.0, 1.0, 0.0]),
            Observable::PopDD => diag([0.0, 0.0, 0.0, 1.0]),
            Observable::ZAlice => diag([1.0, 1.0, -1.0, -1.0]),
            Observable::ZBob => diag([1.0, -1.0, 1.0, -1.0]),
        }
    }

    /// The operator whose expectation on the unrotated state this reading measures.
    pub fn effective_operator<T: Real>(self, setting: ReadoutSetting) -> Mat4<T> {
        let u = setting.unitary::<T>();
        linalg::matmul4(&linalg::matmul4(&linalg::dagger4(u.entries()), &self.operator()), u.entries())
    }
}

impl FromStr for Observable {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| format!("unknown observable {s:?}"))
    }
}

/// Two-qubit Pauli product `P_a (x) P_b`, indices in `I, X, Y, Z` order.
pub(crate) fn pauli_product<T: Real>(a: usize, b: usize) -> Mat4<T> {
    kron2(&pauli(a), &pauli(b))
}

pub(crate) fn pauli_label(a: usize, b: usize) -> String {
    const L: [char; 4] = ['I', 'X', 'Y', 'Z'];
    [L[a], L[b]].iter().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord<T> {
    pub setting: ReadoutSetting,
    /// One reading per entry of [`Observable::ALL`].
    pub values: Vec<(Observable, T)>,
    pub noise_sigma: T,
}

impl<T: Real> MeasurementRecord<T> {
    pub fn value(&self, o: Observable) -> Option<T> {
        self.values.iter().find(|(k, _)| *k == o).map(|(_, v)| *v)
    }
}

/// Rotate by `setting`, read every observable and add Gaussian noise of width `sigma`.
///
/// Each setting draws from its own ChaCha stream of `seed`, so a full set of
/// nine readings shares one seed without correlated noise.
pub fn simulate_readout<T: Real>(
    rho: &DensityMatrix4<T>,
    setting: ReadoutSetting,
    sigma: T,
    seed: u64,
) -> Result<MeasurementRecord<T>> {
    if !(sigma >= T::zero() && sigma.is_finite()) {
        return Err(Error::InvalidInput(format!("readout sigma must be >= 0, got {sigma}")));
    }
    let rotated = rho.evolve(&setting.unitary());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(setting.index() as u64);
    let values = Observable::ALL
        .into_iter()
        .map(|o| {
            let noise: f64 = rng.sample(StandardNormal);
            (o, rotated.expectation(&o.operator()) + sigma * T::lit(noise))
        })
        .collect();
    Ok(MeasurementRecord { setting, values, noise_sigma: sigma })
}

/// Readings for all nine settings.
pub fn simulate_all<T: Real>(rho: &DensityMatrix4<T>, sigma: T, seed: u64) -> Result<Vec<MeasurementRecord<T>>> {
    ReadoutSetting::all()
        .into_iter()
        .map(|s| simulate_readout(rho, s, sigma, seed))
        .collect()
}

/// Run `experiment`, read it out at all nine settings and reconstruct.
///
/// Pulse noise uses the experiment's own seed; readout noise uses `seed`.
pub fn measure_experiment<T: Real>(
    experiment: &Experiment<T>,
    sigma: T,
    seed: u64,
) -> Result<(ReconstructionResult<T>, Vec<MeasurementRecord<T>>)> {
    let rho = experiment.run()?;
    let records = simulate_all(&rho, sigma, seed)?;
    Ok((reconstruct(&records)?, records))
}

/// Payoffs from the diagonal of `rho`.
pub fn payoff_from_density<T: Real>(rho: &DensityMatrix4<T>, table: &PayoffTable<T>) -> (T, T) {
    let p = rho.populations();
    (table.payoff_a(&p), table.payoff_b(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{entangling_gate, EntanglementParam};
    use crate::qstate::{density_from_state, Outcome, StateVector4};

    fn ghz() -> DensityMatrix4<f64> {
        let s = crate::qstate::apply(&entangling_gate(EntanglementParam::maximal()), &StateVector4::cc());
        density_from_state(&s)
    }

    #[test]
    fn nine_distinct_settings() {
        let all = ReadoutSetting::all();
        assert_eq!(all.len(), 9);
        for (i, s) in all.iter().enumerate() {
            assert_eq!(s.index(), i);
            assert_eq!(s.to_string().parse::<ReadoutSetting>().unwrap(), *s);
        }
    }

    #[test]
    fn populations_without_rotation() {
        let none = ReadoutSetting::new(ReadoutRotation::None, ReadoutRotation::None);
        let rho = DensityMatrix4::diagonal([1.0, 0.0, 0.0, 0.0]).unwrap();
        let r = simulate_readout(&rho, none, 0.0, 1).unwrap();
        let pops: Vec<f64> = r.values[..4].iter().map(|(_, v)| *v).collect();
        assert_eq!(pops, vec![1.0, 0.0, 0.0, 0.0]);

        let r = simulate_readout(&ghz(), none, 0.0, 1).unwrap();
        assert!((r.value(Observable::PopCC).unwrap() - 0.5).abs() < 1e-12);
        assert!((r.value(Observable::PopDD).unwrap() - 0.5).abs() < 1e-12);
        assert!(r.value(Observable::PopCD).unwrap().abs() < 1e-12);
        assert!(r.value(Observable::ZAlice).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rotated_settings_match_rotate_then_read() {
        let rho = ghz();
        for s in ReadoutSetting::all() {
            let r = simulate_readout(&rho, s, 0.0, 3).unwrap();
            let rotated = rho.evolve(&s.unitary());
            for o in Outcome::ALL {
                let expect = rotated.population(o);
                let got = r.values[o.index()].1;
                assert!((got - expect).abs() < 1e-12, "{s} {o:?}");
            }
        }
        // (|CC> + i|DD>)/sqrt2 under x90 on both spins exposes the imaginary coherence.
        let xx = ReadoutSetting::new(ReadoutRotation::X90, ReadoutRotation::X90);
        let r = simulate_readout(&rho, xx, 0.0, 3).unwrap();
        assert!((r.value(Observable::PopCC).unwrap() - 0.5).abs() > 0.1);
    }

    #[test]
    fn readout_noise_is_seeded() {
        let s = ReadoutSetting::new(ReadoutRotation::X90, ReadoutRotation::None);
        let a = simulate_readout(&ghz(), s, 0.02, 9).unwrap();
        assert_eq!(a, simulate_readout(&ghz(), s, 0.02, 9).unwrap());
        assert_ne!(a, simulate_readout(&ghz(), s, 0.02, 10).unwrap());
        assert!(simulate_readout(&ghz(), s, -0.1, 9).is_err());
    }

    #[test]
    fn payoffs_from_diagonal() {
        let t = PayoffTable::default();
        let cases = [
            ([1.0, 0.0, 0.0, 0.0], (3.0, 3.0)),
            ([0.0, 0.0, 0.0, 1.0], (1.0, 1.0)),
            ([0.0, 0.0, 1.0, 0.0], (5.0, 0.0)),
        ];
        for (d, want) in cases {
            assert_eq!(payoff_from_density(&DensityMatrix4::diagonal(d).unwrap(), &t), want);
        }
    }
}

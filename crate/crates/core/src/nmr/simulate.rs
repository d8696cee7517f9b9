use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{experiment_sequence, strategy_profile, NoiseModel, PulsePrimitive, PulseSequence, SpinSystem, StrategyAssignment, Target};
use crate::equilibrium::Profile;
use crate::error::{Error, Result};
use crate::game::{EntanglementParam, PayoffTable};
use crate::qstate::{c, density_from_state, tensor, DensityMatrix4, Probabilities, StateVector4, Unitary2, Unitary4};
use crate::scalar::Real;

/// Random factors realized for one run of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseDraw<T> {
    /// Multiplier on the coupling constant.
    pub j_factor: T,
    /// Multiplier on every rotation angle (RF field inhomogeneity).
    pub b1_factor: T,
    /// One multiplier per rotation, in sequence order.
    pub pulse_factors: Vec<T>,
}

impl<T: Real> NoiseDraw<T> {
    pub fn ideal(rotations: usize) -> Self {
        Self {
            j_factor: T::one(),
            b1_factor: T::one(),
            pulse_factors: vec![T::one(); rotations],
        }
    }

    /// Draws in a fixed order so a seed always yields the same factors.
    pub fn sample(noise: &NoiseModel<T>, rotations: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
        let f = noise.field_inhomogeneity.as_f64();
        let e = noise.rotation_angle_error.as_f64();
        let mut spread = |w: f64| T::lit(1.0 + w * rng.random_range(-1.0..=1.0));
        let j_factor = spread(f);
        let b1_factor = spread(f);
        let pulse_factors = (0..rotations).map(|_| spread(e)).collect();
        Self { j_factor, b1_factor, pulse_factors }
    }
}

fn check_addressing<T: Real>(seq: &PulseSequence<T>, sys: &SpinSystem<T>) -> Result<()> {
    if sys.selective_addressing {
        return Ok(());
    }
    for (i, p) in seq.primitives().iter().enumerate() {
        if let PulsePrimitive::Rotation { target: Target::Alice | Target::Bob, .. } = p {
            return Err(Error::InvalidSequence(format!(
                "primitive {i}: selective pulse on a system without selective addressing"
            )));
        }
    }
    Ok(())
}

/// Free evolution `exp(-i (pi J / 2) Z(x)Z t)`.
fn zz_evolution<T: Real>(j_coupling: T, t: T) -> Unitary4<T> {
    let a = T::PI() * j_coupling * t / T::lit(2.0);
    let (s, co) = a.sin_cos();
    let minus = c(co, -s);
    let plus = c(co, s);
    let z = c(T::zero(), T::zero());
    Unitary4::from_entries_unchecked([
        [minus, z, z, z],
        [z, plus, z, z],
        [z, z, plus, z],
        [z, z, z, minus],
    ])
}

/// Unitary of one primitive with the given angle multiplier and coupling.
pub fn primitive_unitary<T: Real>(p: &PulsePrimitive<T>, j_coupling: T, angle_factor: T) -> Result<Unitary4<T>> {
    match *p {
        PulsePrimitive::Rotation { target, angle_deg, axis } => {
            let r = Unitary2::rotation(axis.vector(), (angle_deg * angle_factor).to_radians());
            let id = Unitary2::identity();
            Ok(match target {
                Target::Alice => tensor(&r, &id),
                Target::Bob => tensor(&id, &r),
                Target::Both => tensor(&r, &r),
            })
        }
        PulsePrimitive::FreeEvolution { duration } => {
            if !(duration >= T::zero() && duration.is_finite()) {
                return Err(Error::InvalidSequence(format!("negative or non-finite delay {duration}")));
            }
            Ok(zz_evolution(j_coupling, duration))
        }
    }
}

fn walk<T: Real>(
    seq: &PulseSequence<T>,
    sys: &SpinSystem<T>,
    draw: &NoiseDraw<T>,
    mut step: impl FnMut(&Unitary4<T>, T),
) -> Result<()> {
    check_addressing(seq, sys)?;
    let j = sys.j_coupling * draw.j_factor;
    let mut pulses = draw.pulse_factors.iter();
    for p in seq.primitives() {
        let (u, dt) = match p {
            PulsePrimitive::Rotation { .. } => {
                let eps = *pulses.next().unwrap_or(&T::one());
                (primitive_unitary(p, j, draw.b1_factor * eps)?, sys.pulse_width)
            }
            PulsePrimitive::FreeEvolution { duration } => (primitive_unitary(p, j, T::one())?, *duration),
        };
        step(&u, dt);
    }
    Ok(())
}

/// Ordered product of the primitive unitaries, later primitives on the left.
///
/// T2 damping is not unitary and is ignored here; see [`run_experiment`].
pub fn sequence_unitary<T: Real>(
    seq: &PulseSequence<T>,
    sys: &SpinSystem<T>,
    noise: &NoiseModel<T>,
) -> Result<Unitary4<T>> {
    let draw = NoiseDraw::sample(noise, seq.rotation_count());
    sequence_unitary_with(seq, sys, &draw)
}

pub(crate) fn sequence_unitary_with<T: Real>(
    seq: &PulseSequence<T>,
    sys: &SpinSystem<T>,
    draw: &NoiseDraw<T>,
) -> Result<Unitary4<T>> {
    let mut total = Unitary4::identity();
    walk(seq, sys, draw, |u, _| total = u.mul(&total))?;
    Ok(total)
}

/// Evolve `rho` through `seq`, damping coherences after each primitive when enabled.
pub(crate) fn evolve_density<T: Real>(
    rho: DensityMatrix4<T>,
    seq: &PulseSequence<T>,
    sys: &SpinSystem<T>,
    noise: &NoiseModel<T>,
) -> Result<DensityMatrix4<T>> {
    let draw = NoiseDraw::sample(noise, seq.rotation_count());
    if !noise.t2_damping {
        return Ok(rho.evolve(&sequence_unitary_with(seq, sys, &draw)?));
    }
    let mut rho = rho;
    walk(seq, sys, &draw, |u, dt| {
        rho = rho.evolve(u).damp_coherences((-dt / sys.t2).exp());
    })?;
    Ok(rho)
}

/// Full protocol from the effective pure state `|CC>`.
pub fn run_experiment<T: Real>(
    g: EntanglementParam<T>,
    assignment: StrategyAssignment,
    sys: &SpinSystem<T>,
    noise: &NoiseModel<T>,
    table: &PayoffTable<T>,
) -> Result<DensityMatrix4<T>> {
    let seq = experiment_sequence(g, strategy_profile(g, table, assignment)?, sys);
    evolve_density(density_from_state(&StateVector4::cc()), &seq, sys, noise)
}

/// One configured run of the simulated spectrometer.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment<T> {
    pub gamma: EntanglementParam<T>,
    pub table: PayoffTable<T>,
    pub profile: Profile,
    pub system: SpinSystem<T>,
    pub noise: NoiseModel<T>,
}

impl<T: Real> Experiment<T> {
    /// Plays the profile selected by the regime of `gamma`, Alice defecting
    /// in the intermediate regime.
    pub fn new(gamma: EntanglementParam<T>, table: PayoffTable<T>) -> Result<Self> {
        let profile = strategy_profile(gamma, &table, StrategyAssignment::default())?;
        Ok(Self::with_profile(gamma, table, profile))
    }

    pub fn with_profile(gamma: EntanglementParam<T>, table: PayoffTable<T>, profile: Profile) -> Self {
        Self {
            gamma,
            table,
            profile,
            system: SpinSystem::default(),
            noise: NoiseModel::noiseless(),
        }
    }

    pub fn sequence(&self) -> PulseSequence<T> {
        experiment_sequence(self.gamma, self.profile, &self.system)
    }

    pub fn run(&self) -> Result<DensityMatrix4<T>> {
        evolve_density(density_from_state(&StateVector4::cc()), &self.sequence(), &self.system, &self.noise)
    }

    /// Payoffs read from the diagonal of the final density matrix.
    pub fn payoffs(&self) -> Result<(T, T)> {
        let p: Probabilities<T> = self.run()?.populations();
        Ok((self.table.payoff_a(&p), self.table.payoff_b(&p)))
    }
}

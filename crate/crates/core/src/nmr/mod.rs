//! Simulated two-spin NMR backend.
//!
//! Gates of the game are compiled into hard RF pulses and J-coupling free
//! evolution, then integrated under the weak-coupling Hamiltonian
//! `H = (pi J / 2) sigma_z (x) sigma_z` in the doubly rotating frame.

mod compile;
mod format;
mod simulate;

use std::fmt;

pub use compile::{
    compile_disentangler, compile_entangler, compile_profile, compile_strategies, experiment_sequence, strategy_profile,
    StrategyAssignment,
};
pub use format::{parse_sequence, write_sequence};
pub use simulate::{primitive_unitary, run_experiment, sequence_unitary, Experiment, NoiseDraw};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Physical parameters of the two-spin register.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinSystem<T> {
    /// Scalar coupling in Hz.
    pub j_coupling: T,
    /// Transverse relaxation time in seconds.
    pub t2: T,
    pub selective_addressing: bool,
    /// Nominal duration charged per RF pulse, in seconds.
    pub pulse_width: T,
}

impl<T: Real> SpinSystem<T> {
    pub fn new(j_coupling: T, t2: T, selective_addressing: bool, pulse_width: T) -> Result<Self> {
        if !(j_coupling > T::zero() && j_coupling.is_finite()) {
            return Err(Error::InvalidInput(format!("j_coupling must be > 0 Hz, got {j_coupling}")));
        }
        if !(t2 > T::zero() && t2.is_finite()) {
            return Err(Error::InvalidInput(format!("t2 must be > 0 s, got {t2}")));
        }
        if !(pulse_width >= T::zero() && pulse_width.is_finite()) {
            return Err(Error::InvalidInput(format!("pulse width must be >= 0 s, got {pulse_width}")));
        }
        Ok(Self { j_coupling, t2, selective_addressing, pulse_width })
    }
}

impl<T: Real> Default for SpinSystem<T> {
    /// J = 7.17 Hz, T2 = 3 s, selective pulses available, 1 ms pulses.
    fn default() -> Self {
        Self {
            j_coupling: T::lit(7.17),
            t2: T::lit(3.0),
            selective_addressing: true,
            pulse_width: T::lit(1e-3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Alice,
    Bob,
    Both,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Alice => "alice",
            Target::Bob => "bob",
            Target::Both => "both",
        }
    }
}

impl std::str::FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alice" => Ok(Target::Alice),
            "bob" => Ok(Target::Bob),
            "both" => Ok(Target::Both),
            other => Err(format!("unknown pulse target {other:?}")),
        }
    }
}

/// RF phase axis in the rotating frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseAxis {
    X,
    MinusX,
    Y,
    MinusY,
}

impl PhaseAxis {
    pub fn name(self) -> &'static str {
        match self {
            PhaseAxis::X => "x",
            PhaseAxis::MinusX => "-x",
            PhaseAxis::Y => "y",
            PhaseAxis::MinusY => "-y",
        }
    }

    pub fn vector<T: Real>(self) -> [T; 3] {
        let (o, z) = (T::one(), T::zero());
        match self {
            PhaseAxis::X => [o, z, z],
            PhaseAxis::MinusX => [-o, z, z],
            PhaseAxis::Y => [z, o, z],
            PhaseAxis::MinusY => [z, -o, z],
        }
    }
}

impl std::str::FromStr for PhaseAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "x" => Ok(PhaseAxis::X),
            "-x" => Ok(PhaseAxis::MinusX),
            "y" => Ok(PhaseAxis::Y),
            "-y" => Ok(PhaseAxis::MinusY),
            other => Err(format!("unknown phase axis {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PulsePrimitive<T> {
    /// Hard pulse rotating `target` by `angle_deg` about `axis`.
    Rotation { target: Target, angle_deg: T, axis: PhaseAxis },
    /// Free evolution under the coupling for `duration` seconds.
    FreeEvolution { duration: T },
}

impl<T: Real> PulsePrimitive<T> {
    pub fn rotation(target: Target, angle_deg: T, axis: PhaseAxis) -> Self {
        PulsePrimitive::Rotation { target, angle_deg, axis }
    }

    pub fn delay(duration: T) -> Self {
        PulsePrimitive::FreeEvolution { duration }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PulseSequence<T> {
    primitives: Vec<PulsePrimitive<T>>,
    label: String,
}

impl<T: Real> PulseSequence<T> {
    /// Rejects empty sequences and non-finite or negative parameters.
    pub fn new(label: impl Into<String>, primitives: Vec<PulsePrimitive<T>>) -> Result<Self> {
        if primitives.is_empty() {
            return Err(Error::InvalidSequence("sequence is empty".into()));
        }
        for (i, p) in primitives.iter().enumerate() {
            match *p {
                PulsePrimitive::Rotation { angle_deg, .. } if !angle_deg.is_finite() => {
                    return Err(Error::InvalidSequence(format!("primitive {i}: non-finite angle")));
                }
                PulsePrimitive::FreeEvolution { duration } if !(duration >= T::zero() && duration.is_finite()) => {
                    return Err(Error::InvalidSequence(format!(
                        "primitive {i}: delay must be finite and >= 0, got {duration}"
                    )));
                }
                _ => {}
            }
        }
        Ok(Self { primitives, label: label.into() })
    }

    pub fn primitives(&self) -> &[PulsePrimitive<T>] {
        &self.primitives
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        let mut primitives = self.primitives.clone();
        primitives.extend_from_slice(&next.primitives);
        Self {
            primitives,
            label: format!("{}+{}", self.label, next.label),
        }
    }

    pub fn free_evolution_time(&self) -> T {
        self.primitives.iter().fold(T::zero(), |acc, p| match p {
            PulsePrimitive::FreeEvolution { duration } => acc + *duration,
            _ => acc,
        })
    }

    pub fn rotation_count(&self) -> usize {
        self.primitives
            .iter()
            .filter(|p| matches!(p, PulsePrimitive::Rotation { .. }))
            .count()
    }

    /// Free evolution plus one nominal pulse width per rotation.
    pub fn total_duration(&self, sys: &SpinSystem<T>) -> T {
        self.free_evolution_time() + sys.pulse_width * T::from_usize_exact(self.rotation_count())
    }
}

impl<T: Real> fmt::Display for PulseSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_sequence(self))
    }
}

/// Pulse and field imperfections. All fractions must lie in `[0, 0.2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel<T> {
    /// Per-pulse relative angle error, drawn uniformly from `[-e, e]`.
    pub rotation_angle_error: T,
    /// Per-run relative spread on J and on every rotation angle, uniform in `[-f, f]`.
    pub field_inhomogeneity: T,
    /// Damp coherences with `exp(-dt / t2)` after each primitive.
    pub t2_damping: bool,
    pub seed: u64,
}

impl<T: Real> NoiseModel<T> {
    pub fn new(rotation_angle_error: T, field_inhomogeneity: T, t2_damping: bool, seed: u64) -> Result<Self> {
        let max = T::lit(0.2);
        for (name, v) in [
            ("rotation_angle_error", rotation_angle_error),
            ("field_inhomogeneity", field_inhomogeneity),
        ] {
            if !(v >= T::zero() && v <= max) {
                return Err(Error::out_of_range(name, v.as_f64(), 0.0, 0.2));
            }
        }
        Ok(Self { rotation_angle_error, field_inhomogeneity, t2_damping, seed })
    }

    pub fn noiseless() -> Self {
        Self {
            rotation_angle_error: T::zero(),
            field_inhomogeneity: T::zero(),
            t2_damping: false,
            seed: 0,
        }
    }

    pub fn is_noiseless(&self) -> bool {
        self.rotation_angle_error == T::zero() && self.field_inhomogeneity == T::zero() && !self.t2_damping
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }
}

impl<T: Real> Default for NoiseModel<T> {
    fn default() -> Self {
        Self::noiseless()
    }
}

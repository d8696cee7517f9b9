use super::{PhaseAxis, PulsePrimitive, PulseSequence, SpinSystem, Target};
use crate::equilibrium::{thresholds, Profile, Regime};
use crate::error::Result;
use crate::game::{EntanglementParam, PayoffTable};
use crate::scalar::Real;

/// Which player defects in the intermediate regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StrategyAssignment {
    /// D (x) Q.
    #[default]
    AliceDefects,
    /// Q (x) D.
    BobDefects,
}

// J(gamma) = exp(-i gamma/2 sigma_y(x)sigma_y). A 90 degree pulse about x on
// both spins takes sigma_y to sigma_z; the coupling then evolves for t and a
// 90 degree pulse about -x maps back.
fn coupling_block<T: Real>(label: &str, duration: T) -> PulseSequence<T> {
    let ninety = T::lit(90.0);
    PulseSequence::new(
        label,
        vec![
            PulsePrimitive::rotation(Target::Both, ninety, PhaseAxis::X),
            PulsePrimitive::delay(duration),
            PulsePrimitive::rotation(Target::Both, ninety, PhaseAxis::MinusX),
        ],
    )
    .expect("non-negative duration")
}

/// Entangler with free evolution `gamma / (pi J)`.
pub fn compile_entangler<T: Real>(g: EntanglementParam<T>, sys: &SpinSystem<T>) -> PulseSequence<T> {
    coupling_block("entangler", g.gamma() / (T::PI() * sys.j_coupling))
}

/// Disentangler with free evolution `(2 pi - gamma) / (pi J)`; time only runs forward.
pub fn compile_disentangler<T: Real>(g: EntanglementParam<T>, sys: &SpinSystem<T>) -> PulseSequence<T> {
    let two_pi = T::PI() + T::PI();
    coupling_block("disentangler", (two_pi - g.gamma()) / (T::PI() * sys.j_coupling))
}

/// The equilibrium profile the experiment realizes at `gamma`.
///
/// The bistable regime of non-default tables plays the Pareto-better Q (x) Q.
pub fn strategy_profile<T: Real>(
    g: EntanglementParam<T>,
    table: &PayoffTable<T>,
    assignment: StrategyAssignment,
) -> Result<Profile> {
    Ok(match thresholds(table)?.regime(g.gamma()) {
        Regime::Classical => Profile::DD,
        Regime::Intermediate => match assignment {
            StrategyAssignment::AliceDefects => Profile::DQ,
            StrategyAssignment::BobDefects => Profile::QD,
        },
        Regime::Quantum | Regime::Bistable => Profile::QQ,
    })
}

// 90_{-y} - 180_x - 90_y on `target` equals diag(i, -i) = Q exactly.
fn q_sandwich<T: Real>(target: Target) -> [PulsePrimitive<T>; 3] {
    [
        PulsePrimitive::rotation(target, T::lit(90.0), PhaseAxis::MinusY),
        PulsePrimitive::rotation(target, T::lit(180.0), PhaseAxis::X),
        PulsePrimitive::rotation(target, T::lit(90.0), PhaseAxis::Y),
    ]
}

/// Strategy pulses for a named profile.
///
/// A 180 degree y pulse equals `-D`, so every recipe matches its strategy
/// product up to a global phase.
pub fn compile_profile<T: Real>(profile: Profile) -> PulseSequence<T> {
    let flip = |t| PulsePrimitive::rotation(t, T::lit(180.0), PhaseAxis::Y);
    let primitives: Vec<PulsePrimitive<T>> = match profile {
        Profile::DD => vec![flip(Target::Both)],
        Profile::DQ => std::iter::once(flip(Target::Alice)).chain(q_sandwich(Target::Bob)).collect(),
        Profile::QD => std::iter::once(flip(Target::Bob)).chain(q_sandwich(Target::Alice)).collect(),
        Profile::QQ => q_sandwich(Target::Both).to_vec(),
    };
    PulseSequence::new(format!("strategies {profile}"), primitives).expect("recipes are non-empty")
}

/// Strategy pulses for the equilibrium selected by the regime of `gamma`.
pub fn compile_strategies<T: Real>(
    g: EntanglementParam<T>,
    table: &PayoffTable<T>,
    assignment: StrategyAssignment,
) -> Result<PulseSequence<T>> {
    Ok(compile_profile(strategy_profile(g, table, assignment)?))
}

/// Entangler, strategy pulses and disentangler in execution order.
pub fn experiment_sequence<T: Real>(g: EntanglementParam<T>, profile: Profile, sys: &SpinSystem<T>) -> PulseSequence<T> {
    compile_entangler(g, sys)
        .then(&compile_profile(profile))
        .then(&compile_disentangler(g, sys))
}

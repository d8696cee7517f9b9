//! The entangled Prisoner's Dilemma pipeline.
//!
//! `|psi_f> = J^dagger (U_A (x) U_B) J |CC>`, measured in the computational
//! basis; payoffs are expectation values of the classical table.

use crate::error::{Error, Result};
use crate::qstate::{apply, c, probabilities, tensor, Probabilities, StateVector4, Unitary2, Unitary4};
use crate::scalar::Real;

/// A point `(theta, phi)` of the two-parameter strategy family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strategy<T> {
    theta: T,
    phi: T,
}

impl<T: Real> Strategy<T> {
    /// Rejects `theta` outside `[0, pi]` or `phi` outside `[0, pi/2]`.
    pub fn new(theta: T, phi: T) -> Result<Self> {
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(Error::out_of_range("theta", theta.as_f64(), 0.0, std::f64::consts::PI));
        }
        if !(phi >= T::zero() && phi <= T::FRAC_PI_2()) {
            return Err(Error::out_of_range("phi", phi.as_f64(), 0.0, std::f64::consts::FRAC_PI_2));
        }
        Ok(Self { theta, phi })
    }

    /// Cooperate, `U(0, 0) = I`.
    pub fn cooperate() -> Self {
        Self { theta: T::zero(), phi: T::zero() }
    }

    /// Defect, `U(pi, 0) = i sigma_y`.
    pub fn defect() -> Self {
        Self { theta: T::PI(), phi: T::zero() }
    }

    /// The quantum move `U(0, pi/2) = diag(i, -i)`.
    pub fn quantum() -> Self {
        Self { theta: T::zero(), phi: T::FRAC_PI_2() }
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn unitary(&self) -> Unitary2<T> {
        strategy_unitary(self)
    }

    /// "C", "D" or "Q" when the strategy is exactly one of the named points.
    pub fn label(&self) -> Option<&'static str> {
        if *self == Self::cooperate() {
            Some("C")
        } else if *self == Self::defect() {
            Some("D")
        } else if *self == Self::quantum() {
            Some("Q")
        } else {
            None
        }
    }

    /// Label if named, `U(theta,phi)` otherwise.
    pub fn describe(&self) -> String {
        match self.label() {
            Some(l) => l.to_string(),
            None => format!("U({},{})", self.theta, self.phi),
        }
    }
}

/// `[[e^{i phi} cos(theta/2), sin(theta/2)], [-sin(theta/2), e^{-i phi} cos(theta/2)]]`
pub fn strategy_unitary<T: Real>(s: &Strategy<T>) -> Unitary2<T> {
    let (sin_h, cos_h) = (s.theta / T::lit(2.0)).sin_cos();
    let (sin_p, cos_p) = s.phi.sin_cos();
    let z = T::zero();
    Unitary2::from_entries_unchecked([
        [c(cos_p * cos_h, sin_p * cos_h), c(sin_h, z)],
        [c(-sin_h, z), c(cos_p * cos_h, -sin_p * cos_h)],
    ])
}

/// Entanglement parameter `gamma` in `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntanglementParam<T>(T);

impl<T: Real> EntanglementParam<T> {
    pub fn new(gamma: T) -> Result<Self> {
        if !(gamma >= T::zero() && gamma <= T::FRAC_PI_2()) {
            return Err(Error::out_of_range("gamma", gamma.as_f64(), 0.0, std::f64::consts::FRAC_PI_2));
        }
        Ok(Self(gamma))
    }

    pub fn separable() -> Self {
        Self(T::zero())
    }

    pub fn maximal() -> Self {
        Self(T::FRAC_PI_2())
    }

    /// `n * pi / 36` for `n` in `0..=18`, computed so that `n = 18` is exactly `pi/2`.
    pub fn sweep_point(n: usize) -> Result<Self> {
        if n > 18 {
            return Err(Error::out_of_range("n", n as f64, 0.0, 18.0));
        }
        Ok(Self(T::FRAC_PI_2() * (T::from_usize_exact(n) / T::lit(18.0))))
    }

    pub fn gamma(&self) -> T {
        self.0
    }
}

/// The 19 experimental entanglement values `n * pi / 36`, `n = 0..=18`.
pub fn sweep_gammas<T: Real>() -> Vec<EntanglementParam<T>> {
    (0..=18).map(|n| EntanglementParam::sweep_point(n).expect("n <= 18")).collect()
}

/// Classical Prisoner's Dilemma payoffs, seen from the row player.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffTable<T> {
    pub reward: T,
    pub sucker: T,
    pub temptation: T,
    pub punishment: T,
}

impl<T: Real> PayoffTable<T> {
    /// Requires `temptation > reward > punishment > sucker`.
    pub fn new(reward: T, sucker: T, temptation: T, punishment: T) -> Result<Self> {
        let all = [reward, sucker, temptation, punishment];
        if !all.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("PayoffTable"));
        }
        if !(temptation > reward && reward > punishment && punishment > sucker) {
            return Err(Error::NotPrisonersDilemma(format!(
                "reward={reward}, sucker={sucker}, temptation={temptation}, punishment={punishment}"
            )));
        }
        Ok(Self { reward, sucker, temptation, punishment })
    }

    /// Alice's expected payoff for the given outcome distribution.
    pub fn payoff_a(&self, p: &Probabilities<T>) -> T {
        self.reward * p.cc() + self.sucker * p.cd() + self.temptation * p.dc() + self.punishment * p.dd()
    }

    /// Bob's expected payoff: the CD and DC roles are swapped.
    pub fn payoff_b(&self, p: &Probabilities<T>) -> T {
        self.reward * p.cc() + self.temptation * p.cd() + self.sucker * p.dc() + self.punishment * p.dd()
    }
}

impl<T: Real> Default for PayoffTable<T> {
    /// The (3, 0, 5, 1) table.
    fn default() -> Self {
        Self {
            reward: T::lit(3.0),
            sucker: T::zero(),
            temptation: T::lit(5.0),
            punishment: T::one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameOutcome<T> {
    pub final_state: StateVector4<T>,
    pub probabilities: Probabilities<T>,
    pub payoff_a: T,
    pub payoff_b: T,
}

/// `J(gamma) = exp(i gamma D(x)D / 2) = cos(gamma/2) I + i sin(gamma/2) D(x)D`.
///
/// `(D (x) D)^2 = I`, so the closed form is the exact exponential.
pub fn entangling_gate<T: Real>(g: EntanglementParam<T>) -> Unitary4<T> {
    let (s, co) = (g.0 / T::lit(2.0)).sin_cos();
    let dd = defect_defect::<T>();
    let mut m = *Unitary4::identity().entries();
    for (i, row) in m.iter_mut().enumerate() {
        for (j, z) in row.iter_mut().enumerate() {
            *z = z.scale(co) + dd[i][j] * c(T::zero(), s);
        }
    }
    Unitary4::from_entries_unchecked(m)
}

pub fn disentangling_gate<T: Real>(g: EntanglementParam<T>) -> Unitary4<T> {
    entangling_gate(g).dagger()
}

/// `D (x) D`, antidiagonal with entries (1, -1, -1, 1) from the top row down.
pub(crate) fn defect_defect<T: Real>() -> [[num_complex::Complex<T>; 4]; 4] {
    let d = strategy_unitary(&Strategy::<T>::defect());
    *tensor(&d, &d).entries()
}

/// A game at fixed entanglement and payoff table, with the gates precomputed.
#[derive(Debug, Clone)]
pub struct QuantumGame<T> {
    gamma: EntanglementParam<T>,
    table: PayoffTable<T>,
    entangled: StateVector4<T>,
    disentangler: Unitary4<T>,
}

impl<T: Real> QuantumGame<T> {
    pub fn new(gamma: EntanglementParam<T>, table: PayoffTable<T>) -> Self {
        let entangler = entangling_gate(gamma);
        Self {
            gamma,
            table,
            entangled: apply(&entangler, &StateVector4::cc()),
            disentangler: entangler.dagger(),
        }
    }

    pub fn gamma(&self) -> EntanglementParam<T> {
        self.gamma
    }

    pub fn table(&self) -> &PayoffTable<T> {
        &self.table
    }

    pub fn play(&self, alice: &Strategy<T>, bob: &Strategy<T>) -> GameOutcome<T> {
        self.play_unitaries(&alice.unitary(), &bob.unitary())
    }

    pub fn play_unitaries(&self, alice: &Unitary2<T>, bob: &Unitary2<T>) -> GameOutcome<T> {
        let moved = apply(&tensor(alice, bob), &self.entangled);
        let final_state = apply(&self.disentangler, &moved);
        let p = probabilities(&final_state);
        GameOutcome {
            final_state,
            probabilities: p,
            payoff_a: self.table.payoff_a(&p),
            payoff_b: self.table.payoff_b(&p),
        }
    }
}

pub fn play<T: Real>(
    g: EntanglementParam<T>,
    alice: &Strategy<T>,
    bob: &Strategy<T>,
    table: &PayoffTable<T>,
) -> GameOutcome<T> {
    QuantumGame::new(g, *table).play(alice, bob)
}

/// Alice's payoff for `U(theta, phi)` against a defecting Bob (default table):
/// `sin^2(theta/2) + 5 cos^2(theta/2) sin^2(phi) sin^2(gamma)`.
pub fn payoff_vs_defect<T: Real>(theta: T, phi: T, gamma: T) -> T {
    let sh = (theta / T::lit(2.0)).sin();
    let ch = (theta / T::lit(2.0)).cos();
    let sp = phi.sin();
    let sg = gamma.sin();
    sh * sh + T::lit(5.0) * ch * ch * sp * sp * sg * sg
}

/// Alice's payoff for `U(theta, phi)` against Bob playing Q (default table):
/// `4 - cos(theta) + (-3 + 2 cos(theta) - cos^2(theta/2) cos(2 phi)) sin^2(gamma)`.
pub fn payoff_vs_q<T: Real>(theta: T, phi: T, gamma: T) -> T {
    let ch = (theta / T::lit(2.0)).cos();
    let sg = gamma.sin();
    T::lit(4.0) - theta.cos() + (T::lit(-3.0) + T::lit(2.0) * theta.cos() - ch * ch * (T::lit(2.0) * phi).cos()) * sg * sg
}

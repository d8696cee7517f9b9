use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::linalg::zero4;
use super::unitary::{c, Unitary4};
use super::DensityMatrix4;
use crate::error::{Error, Result};
use crate::scalar::{NumericPolicy, Real};

/// Measurement outcome labels in basis order. Alice's choice comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    CC,
    CD,
    DC,
    DD,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::CC, Outcome::CD, Outcome::DC, Outcome::DD];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Outcome::CC => "CC",
            Outcome::CD => "CD",
            Outcome::DC => "DC",
            Outcome::DD => "DD",
        }
    }
}

/// Outcome probabilities `(P_CC, P_CD, P_DC, P_DD)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probabilities<T>(pub [T; 4]);

impl<T: Real> Probabilities<T> {
    pub fn get(&self, o: Outcome) -> T {
        self.0[o.index()]
    }

    pub fn cc(&self) -> T {
        self.0[0]
    }
    pub fn cd(&self) -> T {
        self.0[1]
    }
    pub fn dc(&self) -> T {
        self.0[2]
    }
    pub fn dd(&self) -> T {
        self.0[3]
    }

    pub fn total(&self) -> T {
        self.0.iter().fold(T::zero(), |a, &b| a + b)
    }
}

/// Normalized two-qubit pure state in the (CC, CD, DC, DD) basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector4<T> {
    amps: [Complex<T>; 4],
}

impl<T: Real> StateVector4<T> {
    pub fn new(amplitudes: [Complex<T>; 4]) -> Result<Self> {
        Self::with_policy(amplitudes, &NumericPolicy::default())
    }

    pub fn with_policy(amplitudes: [Complex<T>; 4], policy: &NumericPolicy<T>) -> Result<Self> {
        if !amplitudes.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("StateVector4"));
        }
        let s = Self { amps: amplitudes };
        let deviation = (s.norm_sqr() - T::one()).abs();
        if deviation > policy.exact {
            return Err(Error::NotNormalized {
                deviation: deviation.as_f64(),
            });
        }
        Ok(s)
    }

    pub fn basis(o: Outcome) -> Self {
        let mut amps = [c(T::zero(), T::zero()); 4];
        amps[o.index()] = c(T::one(), T::zero());
        Self { amps }
    }

    /// The game's starting product state |CC>.
    pub fn cc() -> Self {
        Self::basis(Outcome::CC)
    }

    pub fn amplitudes(&self) -> &[Complex<T>; 4] {
        &self.amps
    }

    pub fn amplitude(&self, o: Outcome) -> Complex<T> {
        self.amps[o.index()]
    }

    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
    }

    /// `|<self|other>|^2`.
    pub fn overlap_sqr(&self, other: &Self) -> T {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .fold(c(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b)
            .norm_sqr()
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let mut amps = [c(T::zero(), T::zero()); 4];
            for z in amps.iter_mut() {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                *z = c(T::lit(re), T::lit(im));
            }
            let norm = amps.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
            if norm > T::lit(1e-6) {
                amps.iter_mut().for_each(|z| *z = z.unscale(norm));
                return Self { amps };
            }
        }
    }
}

pub fn apply<T: Real>(u: &Unitary4<T>, s: &StateVector4<T>) -> StateVector4<T> {
    let m = u.entries();
    let mut out = [c(T::zero(), T::zero()); 4];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..4).fold(c(T::zero(), T::zero()), |acc, k| acc + m[i][k] * s.amps[k]);
    }
    StateVector4 { amps: out }
}

pub fn probabilities<T: Real>(s: &StateVector4<T>) -> Probabilities<T> {
    Probabilities(s.amps.map(|z| z.norm_sqr()))
}

pub fn density_from_state<T: Real>(s: &StateVector4<T>) -> DensityMatrix4<T> {
    let mut m = zero4();
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = s.amps[i] * s.amps[j].conj();
        }
    }
    DensityMatrix4::from_entries_unchecked(m)
}

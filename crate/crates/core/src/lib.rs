//! Entanglement-parameterized quantum Prisoner's Dilemma.
//!
//! The numeric core is generic over a [`Real`] scalar (`f32` or `f64`);
//! the `*64` / `*32` aliases below pin the common instantiations.

pub mod equilibrium;
pub mod error;
pub mod game;
pub mod nmr;
pub mod numfmt;
pub mod qstate;
pub mod scalar;
pub mod tomography;
pub mod cli;

pub use error::{Error, Result};
pub use scalar::{NumericPolicy, Real};

pub type Unitary2F64 = qstate::Unitary2<f64>;
pub type Unitary4F64 = qstate::Unitary4<f64>;
pub type StateVector4F64 = qstate::StateVector4<f64>;
pub type DensityMatrix4F64 = qstate::DensityMatrix4<f64>;
pub type Strategy64 = game::Strategy<f64>;
pub type Gamma64 = game::EntanglementParam<f64>;
pub type PayoffTable64 = game::PayoffTable<f64>;
pub type QuantumGame64 = game::QuantumGame<f64>;

pub type Unitary2F32 = qstate::Unitary2<f32>;
pub type Unitary4F32 = qstate::Unitary4<f32>;
pub type StateVector4F32 = qstate::StateVector4<f32>;
pub type DensityMatrix4F32 = qstate::DensityMatrix4<f32>;
pub type Strategy32 = game::Strategy<f32>;
pub type Gamma32 = game::EntanglementParam<f32>;
pub type PayoffTable32 = game::PayoffTable<f32>;
pub type QuantumGame32 = game::QuantumGame<f32>;

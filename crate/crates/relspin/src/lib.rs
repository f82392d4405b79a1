//! Candidate relativistic spin operators for the free Dirac equation,
//! algebraic verification of their properties, and their expectation values
//! on Dirac-Coulomb ground states of hydrogen-like ions.
//!
//! The crate is organized bottom-up:
//!
//! * [`dirac`] - the Dirac matrix algebra in the standard representation and
//!   small complex linear-algebra helpers,
//! * [`spin_ops`] - the six spin-operator families (Pauli, Foldy-Wouthuysen,
//!   Czachor, Frenkel, Chakrabarti, Pryce) as momentum-space 4x4 matrices,
//! * [`checks`] - sampled verification of commutation, algebra, spectrum and
//!   rotation-covariance properties per operator family,
//! * [`quad`] / [`grid`] - quadrature rules and the spherical momentum grid,
//! * [`hydrogen`] - analytic Dirac-Coulomb ground states in position and
//!   momentum space,
//! * [`expectation`] - spin expectation values, variances, superpositions and
//!   atomic-number scans,
//! * [`verify`] - the bundled invariant suite behind `relspin verify`.
//!
//! Atomic units are used throughout: the electron rest mass and Hartree
//! energies are 1 and the speed of light equals `1/alpha_el`.

pub mod checks;
pub mod cli;
pub mod dirac;
pub mod expectation;
pub mod grid;
pub mod hydrogen;
pub mod quad;
pub mod spin_ops;
pub mod verify;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The Pryce operator divides by the squared momentum and is undefined at
    /// the origin of momentum space.
    #[error("momentum must be nonzero for the Pryce operator")]
    SingularMomentum,

    #[error(
        "matrix is not Hermitian: conjugate-transpose defect {defect:.3e} exceeds {tolerance:.3e}"
    )]
    NotHermitian { defect: f64, tolerance: f64 },

    #[error("fine-structure constant must satisfy 0 < alpha_el < 1 (got {alpha_el})")]
    InvalidAlpha { alpha_el: f64 },

    #[error("atomic number {z} outside the supported range 1..=137")]
    ZOutOfRange { z: u32 },

    #[error("supercritical charge: alpha_el * Z = {alpha_z:.6} >= 1 admits no point-nucleus bound state")]
    Supercritical { alpha_z: f64 },

    #[error("invalid quantum numbers: {reason}")]
    InvalidQuantumNumbers { reason: String },

    #[error("rotation axis must be normalizable (got |n| = {norm:.3e})")]
    InvalidRotationAxis { norm: f64 },

    #[error("quadrature did not converge: estimated remainder {estimate:.3e} exceeds budget {budget:.3e}")]
    QuadratureNotConverged { estimate: f64, budget: f64 },

    #[error("quadrature order {order} too small, need at least {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("spinor fields live on incompatible grids")]
    GridMismatch,

    #[error("invalid axis index {index}, expected 1, 2 or 3")]
    InvalidAxis { index: u8 },
}

pub type Result<T> = std::result::Result<T, Error>;

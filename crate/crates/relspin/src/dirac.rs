//! Dirac matrices in the standard (Pauli) representation and helpers for
//! dense 4x4 complex matrices.
//!
//! The representation is fixed once and for all: `beta = diag(1, 1, -1, -1)`
//! and the `alpha_i` carry the Pauli matrices in the off-diagonal blocks.
//! Every quantity reported by this crate (spectra, commutator defect norms,
//! expectation values) is invariant under a change of representation, so the
//! choice is a pure implementation detail.

use std::sync::OnceLock;

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::{Error, Result};

/// Dense 4x4 complex matrix, the carrier for all Dirac-algebra objects.
pub type Matrix4C = Matrix4<Complex64>;

/// Gate for treating a matrix as Hermitian: maximum absolute entry of
/// `A - A^dagger`.
pub const HERMITIAN_GATE: f64 = 1e-10;

/// Fine-structure constant, CODATA 2018 recommended value.
pub const ALPHA_EL_DEFAULT: f64 = 1.0 / 137.035999084;

#[inline]
fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Cartesian component index 1..3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Zero-based component index.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    /// One-based component index as used in output files.
    #[inline]
    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    /// The remaining two axes `(j, k)` such that `(self, j, k)` is a cyclic
    /// permutation of `(1, 2, 3)`.
    #[inline]
    pub fn cyclic(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }
}

impl TryFrom<u8> for Axis {
    type Error = Error;

    fn try_from(index: u8) -> Result<Self> {
        match index {
            1 => Ok(Axis::X),
            2 => Ok(Axis::Y),
            3 => Ok(Axis::Z),
            _ => Err(Error::InvalidAxis { index }),
        }
    }
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Rest mass, fine-structure constant and speed of light in atomic units.
///
/// `c` is derived from `alpha_el` on construction; for the default CODATA
/// value the product `c * alpha_el` is exactly 1 in f64 arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Rest mass (atomic units, 1 for the electron).
    pub m0: f64,
    /// Fine-structure constant.
    pub alpha_el: f64,
    /// Speed of light, `1 / alpha_el`.
    pub c: f64,
}

impl PhysicalConstants {
    pub fn from_alpha(alpha_el: f64) -> Result<Self> {
        if !(alpha_el > 0.0 && alpha_el < 1.0) || !alpha_el.is_finite() {
            return Err(Error::InvalidAlpha { alpha_el });
        }
        Ok(Self {
            m0: 1.0,
            alpha_el,
            c: 1.0 / alpha_el,
        })
    }

    /// Momentum scale `m0 * c` separating the nonrelativistic and
    /// ultrarelativistic regimes.
    #[inline]
    pub fn mc(&self) -> f64 {
        self.m0 * self.c
    }

    /// Rest energy `m0 * c^2`.
    #[inline]
    pub fn rest_energy(&self) -> f64 {
        self.m0 * self.c * self.c
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::from_alpha(ALPHA_EL_DEFAULT).expect("default alpha_el is valid")
    }
}

struct Basis {
    alphas: [Matrix4C; 3],
    beta: Matrix4C,
    sigmas: [Matrix4C; 3],
}

fn basis() -> &'static Basis {
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let alphas = [
            build_alpha(Axis::X),
            build_alpha(Axis::Y),
            build_alpha(Axis::Z),
        ];
        let sigmas = std::array::from_fn(|i| {
            let (j, k) = Axis::ALL[i].cyclic();
            alphas[j.index()] * alphas[k.index()] * c(0.0, -1.0)
        });
        Basis {
            alphas,
            beta: build_beta(),
            sigmas,
        }
    })
}

/// `alpha_i` in the standard representation: Pauli blocks off the diagonal.
pub fn alpha(axis: Axis) -> Matrix4C {
    basis().alphas[axis.index()]
}

/// `beta = diag(1, 1, -1, -1)`.
pub fn beta() -> Matrix4C {
    basis().beta
}

/// `Sigma_i = -i alpha_j alpha_k` with `(i, j, k)` cyclic.
pub fn sigma(axis: Axis) -> Matrix4C {
    basis().sigmas[axis.index()]
}

fn build_alpha(axis: Axis) -> Matrix4C {
    let o = c(0.0, 0.0);
    match axis {
        #[rustfmt::skip]
        Axis::X => Matrix4::new(
            o, o, o, c(1.0, 0.0),
            o, o, c(1.0, 0.0), o,
            o, c(1.0, 0.0), o, o,
            c(1.0, 0.0), o, o, o,
        ),
        #[rustfmt::skip]
        Axis::Y => Matrix4::new(
            o, o, o, c(0.0, -1.0),
            o, o, c(0.0, 1.0), o,
            o, c(0.0, -1.0), o, o,
            c(0.0, 1.0), o, o, o,
        ),
        #[rustfmt::skip]
        Axis::Z => Matrix4::new(
            o, o, c(1.0, 0.0), o,
            o, o, o, c(-1.0, 0.0),
            c(1.0, 0.0), o, o, o,
            o, c(-1.0, 0.0), o, o,
        ),
    }
}

fn build_beta() -> Matrix4C {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(
        c(1.0, 0.0),
        c(1.0, 0.0),
        c(-1.0, 0.0),
        c(-1.0, 0.0),
    ))
}

/// `AB - BA`.
#[inline]
pub fn commutator(a: &Matrix4C, b: &Matrix4C) -> Matrix4C {
    a * b - b * a
}

/// `AB + BA`.
#[inline]
pub fn anticommutator(a: &Matrix4C, b: &Matrix4C) -> Matrix4C {
    a * b + b * a
}

/// Maximum absolute value over all entries; the defect norm used throughout.
pub fn max_abs_entry(m: &Matrix4C) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Maximum absolute entry of `A - A^dagger`.
pub fn hermiticity_defect(m: &Matrix4C) -> f64 {
    max_abs_entry(&(m - m.adjoint()))
}

/// Real spectrum of a Hermitian matrix, sorted ascending.
///
/// Rejects input whose conjugate-transpose defect exceeds [`HERMITIAN_GATE`].
pub fn eigenvalues_hermitian(m: &Matrix4C) -> Result<[f64; 4]> {
    let defect = hermiticity_defect(m);
    if defect > HERMITIAN_GATE {
        return Err(Error::NotHermitian {
            defect,
            tolerance: HERMITIAN_GATE,
        });
    }
    let eigen = m.symmetric_eigen();
    let mut values = [0.0; 4];
    for (slot, ev) in values.iter_mut().zip(eigen.eigenvalues.iter()) {
        *slot = *ev;
    }
    values.sort_by(f64::total_cmp);
    Ok(values)
}

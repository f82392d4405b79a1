//! The six candidate relativistic spin-operator families as momentum-space
//! 4x4 matrices, together with the free Dirac Hamiltonian.
//!
//! In momentum space the kinematic momentum acts by multiplication, so each
//! operator component evaluated at a momentum `p` is an ordinary matrix. The
//! definitions implemented here are, component `i` with `p0 = sqrt(m0^2 c^2 +
//! p^2)`:
//!
//! * Pauli: `Sigma_i / 2`
//! * Foldy-Wouthuysen: `Sigma/2 + i beta (p x alpha) / (2 p0)
//!   - p x (Sigma x p) / (2 p0 (p0 + m0 c))`
//! * Czachor: `m0^2 c^2 Sigma / (2 p0^2) + i m0 c beta (p x alpha) / (2 p0^2)
//!   + (p . Sigma) p / (2 p0^2)`
//! * Frenkel: `Sigma/2 + i beta (p x alpha) / (2 m0 c)`
//! * Chakrabarti: `Sigma/2 + i (alpha x p) / (2 m0 c)
//!   + p x (Sigma x p) / (2 m0 c (m0 c + p0))`
//! * Pryce: `beta Sigma / 2 + i alpha_3 alpha_2 alpha_1 (beta + 1)
//!   (alpha . p) p / (2 p^2)`
//!
//! All families are Hermitian except the Chakrabarti operator, whose
//! `i (alpha x p)` term lacks the `beta` factor that would make it
//! self-adjoint. It is nevertheless diagonalizable with real spectrum (its
//! square is exactly `1/4` times the identity), and its expectation values on
//! the hydrogenic states built by this crate come out real; see
//! [`checks::eigenvalue_deviation`](crate::checks::eigenvalue_deviation) for
//! how its spectrum is assessed.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::dirac::{self, Axis, Matrix4C, PhysicalConstants};
use crate::{Error, Result};

/// The six operator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinKind {
    Pauli,
    FoldyWouthuysen,
    Czachor,
    Frenkel,
    Chakrabarti,
    Pryce,
}

impl SpinKind {
    /// All families, in the fixed enumeration order used for reports and
    /// output files.
    pub const ALL: [SpinKind; 6] = [
        SpinKind::Pauli,
        SpinKind::FoldyWouthuysen,
        SpinKind::Czachor,
        SpinKind::Frenkel,
        SpinKind::Chakrabarti,
        SpinKind::Pryce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpinKind::Pauli => "pauli",
            SpinKind::FoldyWouthuysen => "foldy-wouthuysen",
            SpinKind::Czachor => "czachor",
            SpinKind::Frenkel => "frenkel",
            SpinKind::Chakrabarti => "chakrabarti",
            SpinKind::Pryce => "pryce",
        }
    }

    /// Parse a user-facing name; accepts a few common abbreviations.
    pub fn parse(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "pauli" => Some(SpinKind::Pauli),
            "foldy-wouthuysen" | "foldywouthuysen" | "fw" => Some(SpinKind::FoldyWouthuysen),
            "czachor" => Some(SpinKind::Czachor),
            "frenkel" => Some(SpinKind::Frenkel),
            "chakrabarti" => Some(SpinKind::Chakrabarti),
            "pryce" => Some(SpinKind::Pryce),
            _ => None,
        }
    }
}

impl std::fmt::Display for SpinKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Momentum 3-vector in atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Momentum3 {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl Momentum3 {
    pub const ZERO: Momentum3 = Momentum3 {
        p1: 0.0,
        p2: 0.0,
        p3: 0.0,
    };

    pub fn new(p1: f64, p2: f64, p3: f64) -> Self {
        Self { p1, p2, p3 }
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    #[inline]
    pub fn component(self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.p1,
            Axis::Y => self.p2,
            Axis::Z => self.p3,
        }
    }

    pub fn scaled(self, s: f64) -> Self {
        Self::new(self.p1 * s, self.p2 * s, self.p3 * s)
    }
}

impl From<[f64; 3]> for Momentum3 {
    fn from(p: [f64; 3]) -> Self {
        Self::new(p[0], p[1], p[2])
    }
}

/// `p0 = sqrt(m0^2 c^2 + |p|^2)`, the energy-momentum magnitude.
#[inline]
pub fn p0_scalar(p: Momentum3, consts: &PhysicalConstants) -> f64 {
    let mc = consts.mc();
    (mc * mc + p.norm_squared()).sqrt()
}

/// Free Dirac Hamiltonian `c alpha . p + m0 c^2 beta` at momentum `p`.
pub fn h0_matrix(p: Momentum3, consts: &PhysicalConstants) -> Matrix4C {
    alpha_dot(p) * real(consts.c) + dirac::beta() * real(consts.rest_energy())
}

#[inline]
fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[inline]
fn imag(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// `alpha . p`.
fn alpha_dot(p: Momentum3) -> Matrix4C {
    dirac::alpha(Axis::X) * real(p.p1)
        + dirac::alpha(Axis::Y) * real(p.p2)
        + dirac::alpha(Axis::Z) * real(p.p3)
}

/// `Sigma . p`.
fn sigma_dot(p: Momentum3) -> Matrix4C {
    dirac::sigma(Axis::X) * real(p.p1)
        + dirac::sigma(Axis::Y) * real(p.p2)
        + dirac::sigma(Axis::Z) * real(p.p3)
}

/// Component `i` of `p x alpha`, i.e. `p_j alpha_k - p_k alpha_j` with
/// `(i, j, k)` cyclic.
fn p_cross_alpha(p: Momentum3, axis: Axis) -> Matrix4C {
    let (j, k) = axis.cyclic();
    dirac::alpha(k) * real(p.component(j)) - dirac::alpha(j) * real(p.component(k))
}

/// Component `i` of `p x (Sigma x p)`, expanded literally from the two cross
/// products (all momentum components commute with the matrices).
fn p_cross_sigma_cross_p(p: Momentum3, axis: Axis) -> Matrix4C {
    // t_m = (Sigma x p)_m = Sigma_a p_b - Sigma_b p_a, (m, a, b) cyclic
    let t = |m: Axis| -> Matrix4C {
        let (a, b) = m.cyclic();
        dirac::sigma(a) * real(p.component(b)) - dirac::sigma(b) * real(p.component(a))
    };
    let (j, k) = axis.cyclic();
    t(k) * real(p.component(j)) - t(j) * real(p.component(k))
}

/// Component `i` of the named spin operator at momentum `p`.
///
/// The Pryce definition divides by `p^2` and is rejected at `p = 0`; the
/// directional limit does not exist there.
pub fn spin_matrix(
    kind: SpinKind,
    axis: Axis,
    p: Momentum3,
    consts: &PhysicalConstants,
) -> Result<Matrix4C> {
    let mc = consts.mc();
    let sigma_i = dirac::sigma(axis);
    match kind {
        SpinKind::Pauli => Ok(sigma_i * real(0.5)),
        SpinKind::FoldyWouthuysen => {
            let p0 = p0_scalar(p, consts);
            let m = sigma_i * real(0.5) + dirac::beta() * p_cross_alpha(p, axis) * imag(0.5 / p0)
                - p_cross_sigma_cross_p(p, axis) * real(0.5 / (p0 * (p0 + mc)));
            Ok(m)
        }
        SpinKind::Czachor => {
            let p0sq = p0_scalar(p, consts).powi(2);
            let m = sigma_i * real(0.5 * mc * mc / p0sq)
                + dirac::beta() * p_cross_alpha(p, axis) * imag(0.5 * mc / p0sq)
                + sigma_dot(p) * real(0.5 * p.component(axis) / p0sq);
            Ok(m)
        }
        SpinKind::Frenkel => {
            Ok(sigma_i * real(0.5) + dirac::beta() * p_cross_alpha(p, axis) * imag(0.5 / mc))
        }
        SpinKind::Chakrabarti => {
            let p0 = p0_scalar(p, consts);
            // alpha x p = -(p x alpha)
            let m = sigma_i * real(0.5) - p_cross_alpha(p, axis) * imag(0.5 / mc)
                + p_cross_sigma_cross_p(p, axis) * real(0.5 / (mc * (mc + p0)));
            Ok(m)
        }
        SpinKind::Pryce => {
            let psq = p.norm_squared();
            if psq == 0.0 {
                return Err(Error::SingularMomentum);
            }
            let m = dirac::beta() * sigma_i * real(0.5)
                + pryce_front() * alpha_dot(p) * real(0.5 * p.component(axis) / psq);
            Ok(m)
        }
    }
}

/// `i alpha_3 alpha_2 alpha_1 (beta + 1)`, kept in the printed operand order.
fn pryce_front() -> Matrix4C {
    static FRONT: OnceLock<Matrix4C> = OnceLock::new();
    *FRONT.get_or_init(|| {
        dirac::alpha(Axis::Z)
            * dirac::alpha(Axis::Y)
            * dirac::alpha(Axis::X)
            * (dirac::beta() + Matrix4C::identity())
            * imag(1.0)
    })
}

/// Square of [`spin_matrix`], used for variances.
pub fn spin_squared_matrix(
    kind: SpinKind,
    axis: Axis,
    p: Momentum3,
    consts: &PhysicalConstants,
) -> Result<Matrix4C> {
    let s = spin_matrix(kind, axis, p, consts)?;
    Ok(s * s)
}

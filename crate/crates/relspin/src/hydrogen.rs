//! Analytic Dirac-Coulomb ground states of hydrogen-like ions: bound-state
//! energies, position-space radial functions, their spherical Bessel
//! transforms, and assembled momentum-space 4-spinors.
//!
//! The ground-state radial functions are
//!
//! ```text
//! g(r) =  N r^(gamma - 1) e^(-Z r)
//! f(r) = -N sqrt((1 - gamma) / (1 + gamma)) r^(gamma - 1) e^(-Z r)
//! ```
//!
//! with `gamma = sqrt(1 - (alpha_el Z)^2)` and `N` fixed by the position
//! normalization `integral (g^2 + f^2) r^2 dr = 1`. Their momentum profiles
//!
//! ```text
//! h~(p) = sqrt(2/pi) integral h(r) j_l(p r) r^2 dr      (l = 0 for g, 1 for f)
//! ```
//!
//! have closed forms in terms of the Gamma function, which the state
//! construction uses directly; the quadrature route [`bessel_transform`]
//! is kept as an independent cross-check of those closed forms.
//!
//! Sign and phase conventions (the sign of `f`, the phase of the lower
//! momentum-space component) are not free here: they are pinned by the energy
//! cross-check `<H0> + <-Z/r> = E(1, 1/2)`, which fails if any of them is
//! altered. The assembled momentum-space spinor at a grid node with direction
//! `n` is
//!
//! ```text
//! psi~(p n) = (4 pi)^(-1/2) * ( g~(p) chi_m , -f~(p) (sigma . n) chi_m )
//! ```
//!
//! with `chi_(+1/2) = (1, 0)` and `chi_(-1/2) = (0, 1)`.

use num_complex::Complex64;

use crate::dirac::PhysicalConstants;
use crate::grid::{GridConfig, MomentumGrid, SharedGrid};
use crate::quad;
use crate::{Error, Result};

/// Largest atomic number with a real ground-state exponent at the default
/// fine-structure constant.
pub const Z_MAX: u32 = 137;

/// Required bound on the norm fraction outside the momentum grid.
pub const GRID_TAIL_TOLERANCE: f64 = 1e-10;

/// Target used when sizing the grid; leaves headroom below the tolerance.
const GRID_TAIL_BUDGET: f64 = 1e-11;

/// Absolute budget (atomic units) for the truncated tail of the kinetic
/// expectation; its integrand decays one power of `p` more slowly than the
/// norm density.
const ENERGY_TAIL_BUDGET: f64 = 1e-4;

/// Hard ceiling on the grid momentum. For small ground-state exponents the
/// slowest integrand tails fall off as `p^(-2 gamma)` with `2 gamma` as small
/// as 0.046, which no f64-representable cutoff can capture; beyond this
/// ceiling the integrals are reported at the cutoff.
const MOMENTUM_CAP: f64 = 3e13;

fn check_z(z: u32) -> Result<()> {
    if !(1..=Z_MAX).contains(&z) {
        return Err(Error::ZOutOfRange { z });
    }
    Ok(())
}

/// `gamma = sqrt(1 - (alpha_el Z)^2)`; rejects out-of-range and supercritical `Z`.
pub fn gamma_param(z: u32, consts: &PhysicalConstants) -> Result<f64> {
    check_z(z)?;
    let az = consts.alpha_el * z as f64;
    if az >= 1.0 {
        return Err(Error::Supercritical { alpha_z: az });
    }
    Ok(((1.0 - az) * (1.0 + az)).sqrt())
}

/// Bound-state quantum numbers `(n, j, m, kappa)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    pub n: u32,
    pub j: f64,
    pub m: f64,
    pub kappa: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, j: f64, m: f64, kappa: i32) -> Result<Self> {
        let fail = |reason: &str| Error::InvalidQuantumNumbers {
            reason: reason.to_string(),
        };
        if n == 0 {
            return Err(fail("n must be a positive integer"));
        }
        let twice_j = 2.0 * j;
        if twice_j.fract() != 0.0 || (twice_j as i64) % 2 == 0 || j < 0.5 {
            return Err(fail("j must be a positive half-odd-integer"));
        }
        if j > n as f64 - 0.5 {
            return Err(fail("j must not exceed n - 1/2"));
        }
        let twice_m = 2.0 * m;
        if twice_m.fract() != 0.0 || (twice_m as i64).rem_euclid(2) == 0 || m.abs() > j {
            return Err(fail("m must be a half-odd-integer with |m| <= j"));
        }
        let kappa_magnitude = (j + 0.5) as i32;
        if kappa != kappa_magnitude && kappa != -kappa_magnitude {
            return Err(fail("kappa must equal j + 1/2 up to sign"));
        }
        Ok(Self { n, j, m, kappa })
    }

    /// The ground-state sector with the given spin projection.
    pub fn ground(m: f64) -> Self {
        Self::new(1, 0.5, m, -1).expect("ground-state quantum numbers are valid")
    }
}

/// Bound energy `E(n, j)` including the rest energy, in atomic units.
///
/// Sommerfeld form: `E = m0 c^2 [1 + (alpha Z / (n - j - 1/2 +
/// sqrt((j + 1/2)^2 - alpha^2 Z^2)))^2]^(-1/2)`.
pub fn sommerfeld_energy(q: &QuantumNumbers, z: u32, consts: &PhysicalConstants) -> Result<f64> {
    check_z(z)?;
    let az = consts.alpha_el * z as f64;
    if az >= 1.0 {
        return Err(Error::Supercritical { alpha_z: az });
    }
    let half_width = q.j + 0.5;
    let root = (half_width * half_width - az * az).sqrt();
    let denom = q.n as f64 - q.j - 0.5 + root;
    let ratio = az / denom;
    Ok(consts.rest_energy() / (1.0 + ratio * ratio).sqrt())
}

/// Spin projection of the ground-state doublet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn m_value(self) -> f64 {
        match self {
            Orientation::Up => 0.5,
            Orientation::Down => -0.5,
        }
    }

    /// The two-spinor `chi_m`.
    pub fn chi(self) -> [Complex64; 2] {
        match self {
            Orientation::Up => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            Orientation::Down => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Up => "up",
            Orientation::Down => "down",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "up" | "+" => Some(Orientation::Up),
            "down" | "-" => Some(Orientation::Down),
            _ => None,
        }
    }
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Atomic number, exponent, energy and spin projection of a ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundStateSpec {
    pub z: u32,
    pub gamma: f64,
    pub energy: f64,
    pub orientation: Orientation,
}

impl GroundStateSpec {
    pub fn new(z: u32, orientation: Orientation, consts: &PhysicalConstants) -> Result<Self> {
        let gamma = gamma_param(z, consts)?;
        Ok(Self {
            z,
            gamma,
            energy: consts.rest_energy() * gamma,
            orientation,
        })
    }
}

/// Closed-form radial profiles of a ground state in position and momentum
/// space.
#[derive(Debug, Clone, Copy)]
pub struct RadialFunctions {
    z: f64,
    gamma: f64,
    /// Position normalization constant `N`.
    norm: f64,
    /// `mu = sqrt((1 - gamma)/(1 + gamma))`; `f = -mu g`.
    small_ratio: f64,
}

impl RadialFunctions {
    pub fn for_ground_state(z: u32, consts: &PhysicalConstants) -> Result<Self> {
        let gamma = gamma_param(z, consts)?;
        let zf = z as f64;
        let norm_sq = (1.0 + gamma) * (2.0 * zf).powf(2.0 * gamma + 1.0)
            / (2.0 * libm::tgamma(2.0 * gamma + 1.0));
        Ok(Self {
            z: zf,
            gamma,
            norm: norm_sq.sqrt(),
            small_ratio: ((1.0 - gamma) / (1.0 + gamma)).sqrt(),
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `f(r) / g(r)`, constant in `r`.
    pub fn small_to_large_ratio(&self) -> f64 {
        -self.small_ratio
    }

    /// Large component `g(r) = N r^(gamma-1) e^(-Z r)`, `r > 0`.
    pub fn g_position(&self, r: f64) -> f64 {
        self.norm * r.powf(self.gamma - 1.0) * (-self.z * r).exp()
    }

    /// Small component `f(r) = -mu g(r)`.
    pub fn f_position(&self, r: f64) -> f64 {
        -self.small_ratio * self.g_position(r)
    }

    /// Closed-form l = 0 transform of `g`.
    pub fn g_momentum(&self, p: f64) -> f64 {
        let (rho, phi) = self.polar(p);
        let s = self.gamma + 1.0;
        let front = (2.0 / std::f64::consts::PI).sqrt() * self.norm * libm::tgamma(s);
        front * (s * phi).sin() / (p * rho.powf(s))
    }

    /// Closed-form l = 1 transform of `f`.
    pub fn f_momentum(&self, p: f64) -> f64 {
        let (rho, phi) = self.polar(p);
        let g = self.gamma;
        let term1 = libm::tgamma(g) * (g * phi).sin() / (p * p * rho.powf(g));
        let term2 = libm::tgamma(g + 1.0) * ((g + 1.0) * phi).cos() / (p * rho.powf(g + 1.0));
        -(2.0 / std::f64::consts::PI).sqrt() * self.small_ratio * self.norm * (term1 - term2)
    }

    fn polar(&self, p: f64) -> (f64, f64) {
        (p.hypot(self.z), p.atan2(self.z))
    }

    /// Position-space norm by generalized Gauss-Laguerre quadrature; should
    /// be 1 by construction of `N`.
    pub fn position_norm(&self, order: usize) -> Result<f64> {
        let rule = quad::gauss_laguerre(order, 2.0 * self.gamma)?;
        let scale = self.norm * self.norm * (1.0 + self.small_ratio * self.small_ratio)
            / (2.0 * self.z).powf(2.0 * self.gamma + 1.0);
        Ok(scale * rule.integrate(|_| 1.0))
    }

    /// `<1/r>` by generalized Gauss-Laguerre quadrature (analytically `Z / gamma`).
    pub fn mean_inverse_r(&self, order: usize) -> Result<f64> {
        let rule = quad::gauss_laguerre(order, 2.0 * self.gamma - 1.0)?;
        let scale = self.norm * self.norm * (1.0 + self.small_ratio * self.small_ratio)
            / (2.0 * self.z).powf(2.0 * self.gamma);
        Ok(scale * rule.integrate(|_| 1.0))
    }

    /// Asymptotic coefficients `(Cg, Cf)` of the large-p falloff
    /// `g~ ~ Cg p^-(gamma+2)`, `f~ ~ Cf p^-(gamma+2)`.
    fn tail_coefficients(&self) -> (f64, f64) {
        let g = self.gamma;
        let front = (2.0 / std::f64::consts::PI).sqrt() * self.norm;
        let half_angle = 0.5 * std::f64::consts::PI * g;
        let cg = front * libm::tgamma(g + 1.0) * half_angle.cos();
        let cf =
            front * self.small_ratio * (libm::tgamma(g) + libm::tgamma(g + 1.0)) * half_angle.sin();
        (cg, cf)
    }

    /// Bound on the momentum-norm fraction above `p_cut` (valid for
    /// `p_cut >> Z`).
    pub fn momentum_tail_bound(&self, p_cut: f64) -> f64 {
        let (cg, cf) = self.tail_coefficients();
        let exponent = 2.0 * self.gamma + 1.0;
        let leading = 2.0 * (cg * cg + cf * cf) * p_cut.powf(-exponent) / exponent;
        // next-to-leading falloff dominates near small Z where the leading
        // coefficients almost vanish
        let cb = (2.0 / std::f64::consts::PI).sqrt()
            * self.norm
            * 2.0
            * (libm::tgamma(self.gamma + 2.0) + libm::tgamma(self.gamma + 1.0));
        let sub = 2.0 * cb * cb * self.z * self.z * p_cut.powf(-exponent - 2.0) / (exponent + 2.0);
        leading + sub
    }

    /// Bound on the truncated tail of the kinetic expectation (atomic units),
    /// whose integrand carries an extra `c p` relative to the norm density.
    pub fn energy_tail_bound(&self, p_cut: f64, c_light: f64) -> f64 {
        let (cg, cf) = self.tail_coefficients();
        let exponent = 2.0 * self.gamma;
        2.0 * c_light * (cg * cf).abs() * p_cut.powf(-exponent) / exponent
    }

    /// Cutoff above which the kinetic-expectation tail stays within
    /// `abs_budget`, capped at [`MOMENTUM_CAP`].
    fn suggest_p_max_for_energy(&self, abs_budget: f64, c_light: f64) -> f64 {
        let (cg, cf) = self.tail_coefficients();
        let exponent = 2.0 * self.gamma;
        let product = (cg * cf).abs();
        if product == 0.0 {
            return 0.0;
        }
        let raw = (2.0 * c_light * product / (exponent * abs_budget)).powf(1.0 / exponent);
        raw.min(MOMENTUM_CAP)
    }

    /// Bound on the momentum-norm fraction below `p_cut` (valid for
    /// `p_cut << Z`).
    pub fn momentum_head_bound(&self, p_cut: f64) -> f64 {
        // |g~(0)| bounds the density near the origin; f~ vanishes there
        let g0 = (2.0 / std::f64::consts::PI).sqrt() * self.norm * libm::tgamma(self.gamma + 2.0)
            / self.z.powf(self.gamma + 2.0);
        2.0 * g0 * g0 * p_cut.powi(3) / 3.0
    }

    /// Momentum bounds that keep the out-of-grid norm fraction within the
    /// requested budget.
    pub fn suggest_momentum_bounds(&self, budget: f64) -> (f64, f64) {
        let p_min = 1e-4 * self.z;
        let (cg, cf) = self.tail_coefficients();
        let exponent = 2.0 * self.gamma + 1.0;
        let p_max = (4.0 * (cg * cg + cf * cf) / (exponent * budget)).powf(1.0 / exponent);
        // never truncate below the relativistic momentum scale
        (p_min, p_max.max(50.0 * self.z).min(MOMENTUM_CAP))
    }
}

/// Build the momentum grid sized for one ground state.
///
/// The cutoff honours two analytic tail bounds: the norm fraction outside
/// the grid must stay below [`GRID_TAIL_TOLERANCE`], and the truncated
/// kinetic-expectation tail below [`ENERGY_TAIL_BUDGET`] wherever that is
/// reachable under [`MOMENTUM_CAP`].
pub fn ground_state_grid(
    radial: &RadialFunctions,
    config: GridConfig,
    consts: &PhysicalConstants,
) -> Result<MomentumGrid> {
    let (p_min, p_norm) = radial.suggest_momentum_bounds(GRID_TAIL_BUDGET);
    let p_energy = radial.suggest_p_max_for_energy(ENERGY_TAIL_BUDGET, consts.c);
    let p_max = p_norm.max(p_energy);
    let tail = radial.momentum_tail_bound(p_max) + radial.momentum_head_bound(p_min);
    if tail > GRID_TAIL_TOLERANCE {
        return Err(Error::QuadratureNotConverged {
            estimate: tail,
            budget: GRID_TAIL_TOLERANCE,
        });
    }
    MomentumGrid::build(p_min, p_max, tail, config)
}

/// Spherical Bessel function of order 0 or 1.
fn spherical_bessel(ell: u8, x: f64) -> f64 {
    debug_assert!(ell <= 1);
    if x.abs() < 0.5 {
        let x2 = x * x;
        if ell == 0 {
            1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0))
        } else {
            x / 3.0 * (1.0 - x2 / 10.0 * (1.0 - x2 / 28.0 * (1.0 - x2 / 54.0)))
        }
    } else if ell == 0 {
        x.sin() / x
    } else {
        x.sin() / (x * x) - x.cos() / x
    }
}

/// Oscillation budget for the quadrature transform: above roughly this many
/// Bessel oscillations across the radial support the rule is refused.
const MAX_TRANSFORM_PANELS: usize = 100_000;

/// Spherical Bessel transform `sqrt(2/pi) integral h(r) j_l(p r) r^2 dr` by
/// panel-adaptive quadrature, evaluated at each requested momentum.
///
/// `ell = 0` transforms the large component `g`, `ell = 1` the small
/// component `f`. Intended as an independent cross-check of the closed forms
/// at moderate oscillation counts `p * r`; production states use
/// [`RadialFunctions::g_momentum`] and [`RadialFunctions::f_momentum`], which
/// are exact at every momentum.
pub fn bessel_transform(radial: &RadialFunctions, ell: u8, momenta: &[f64]) -> Result<Vec<f64>> {
    assert!(ell <= 1, "only s- and p-wave transforms are defined");
    // support of r^(gamma+1) e^(-Z r): truncating at Z r = 60 leaves a
    // relative remainder below 1e-19
    let r_max = 60.0 / radial.z;
    let order = 16;

    momenta
        .iter()
        .map(|&p| {
            let oscillation_width = if p > 0.0 {
                std::f64::consts::PI / p
            } else {
                f64::INFINITY
            };
            let width = (r_max / 8.0).min(oscillation_width);
            let panels = (r_max / width).ceil() as usize;
            if panels > MAX_TRANSFORM_PANELS {
                return Err(Error::QuadratureNotConverged {
                    estimate: panels as f64,
                    budget: MAX_TRANSFORM_PANELS as f64,
                });
            }
            // geometric refinement of the first panel tames the r^(gamma+1)
            // endpoint
            let first = r_max / panels as f64;
            let mut boundaries: Vec<f64> = Vec::with_capacity(panels + 48);
            boundaries.push(0.0);
            for k in (1..=40).rev() {
                boundaries.push(first * 0.5_f64.powi(k));
            }
            for k in 1..=panels {
                boundaries.push(first * k as f64);
            }
            let rule = quad::composite_on_panels(&boundaries, order)?;
            let h = |r: f64| -> f64 {
                if ell == 0 {
                    radial.g_position(r)
                } else {
                    radial.f_position(r)
                }
            };
            let value = rule.integrate(|r| {
                if r <= 0.0 {
                    0.0
                } else {
                    h(r) * spherical_bessel(ell, p * r) * r * r
                }
            });
            Ok((2.0 / std::f64::consts::PI).sqrt() * value)
        })
        .collect()
}

/// A 4-spinor sampled on a shared momentum grid.
#[derive(Debug, Clone)]
pub struct MomentumSpinorField {
    grid: SharedGrid,
    values: Vec<[Complex64; 4]>,
}

impl MomentumSpinorField {
    pub fn grid(&self) -> &SharedGrid {
        &self.grid
    }

    pub fn values(&self) -> &[[Complex64; 4]] {
        &self.values
    }

    /// Total weighted norm `sum w |psi|^2`.
    pub fn norm(&self) -> f64 {
        self.grid
            .nodes()
            .zip(self.values.iter())
            .map(|(node, v)| node.weight * v.iter().map(|z| z.norm_sqr()).sum::<f64>())
            .sum()
    }

    /// Weighted inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if !self.grid.compatible(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .grid
            .nodes()
            .zip(self.values.iter().zip(other.values.iter()))
            .map(|(node, (a, b))| {
                let dot: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
                dot * Complex64::new(node.weight, 0.0)
            })
            .sum())
    }

    /// Linear combination `ca * a + cb * b` on a common grid.
    pub fn linear_combination(ca: Complex64, a: &Self, cb: Complex64, b: &Self) -> Result<Self> {
        if !a.grid.compatible(&b.grid) {
            return Err(Error::GridMismatch);
        }
        let values = a
            .values
            .iter()
            .zip(b.values.iter())
            .map(|(x, y)| {
                [
                    ca * x[0] + cb * y[0],
                    ca * x[1] + cb * y[1],
                    ca * x[2] + cb * y[2],
                    ca * x[3] + cb * y[3],
                ]
            })
            .collect();
        Ok(Self {
            grid: a.grid.clone(),
            values,
        })
    }
}

/// Evaluate the momentum-space ground-state spinor on every node of `grid`.
pub fn assemble_momentum_spinor(
    spec: &GroundStateSpec,
    radial: &RadialFunctions,
    grid: &SharedGrid,
) -> MomentumSpinorField {
    let chi = spec.orientation.chi();
    let inv_sqrt_4pi = 0.5 / std::f64::consts::PI.sqrt();

    // radial amplitudes per radial node
    let amplitudes: Vec<(f64, f64)> = grid
        .radial_nodes()
        .iter()
        .map(|&p| {
            (
                inv_sqrt_4pi * radial.g_momentum(p),
                -inv_sqrt_4pi * radial.f_momentum(p),
            )
        })
        .collect();

    let values = grid
        .nodes()
        .map(|node| {
            let (a, b) = amplitudes[node.radial_index];
            let p = node.p.norm();
            let n = [node.p.p1 / p, node.p.p2 / p, node.p.p3 / p];
            // sigma . n acting on chi
            let up = Complex64::new(n[0], -n[1]);
            let dn = Complex64::new(n[0], n[1]);
            let sn_chi = [
                Complex64::new(n[2], 0.0) * chi[0] + up * chi[1],
                dn * chi[0] - Complex64::new(n[2], 0.0) * chi[1],
            ];
            [
                Complex64::new(a, 0.0) * chi[0],
                Complex64::new(a, 0.0) * chi[1],
                Complex64::new(b, 0.0) * sn_chi[0],
                Complex64::new(b, 0.0) * sn_chi[1],
            ]
        })
        .collect();

    MomentumSpinorField {
        grid: grid.clone(),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn consts() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    #[test]
    fn gamma_limits() {
        let c = consts();
        assert!(gamma_param(1, &c).unwrap() > 0.99997);
        let g137 = gamma_param(137, &c).unwrap();
        assert!(g137 > 0.0 && g137 < 0.03);
        assert!(matches!(
            gamma_param(138, &c),
            Err(Error::ZOutOfRange { z: 138 })
        ));
        assert!(matches!(gamma_param(0, &c), Err(Error::ZOutOfRange { .. })));
        // supercritical via an alpha override
        let heavy = PhysicalConstants::from_alpha(1.0 / 100.0).unwrap();
        assert!(matches!(
            gamma_param(120, &heavy),
            Err(Error::Supercritical { .. })
        ));
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(1, 0.5, 0.5, -1).is_ok());
        assert!(QuantumNumbers::new(3, 1.5, -0.5, 2).is_ok());
        assert!(QuantumNumbers::new(0, 0.5, 0.5, -1).is_err());
        assert!(QuantumNumbers::new(1, 1.0, 0.5, -1).is_err());
        assert!(QuantumNumbers::new(1, 1.5, 0.5, -2).is_err());
        assert!(QuantumNumbers::new(2, 0.5, 1.5, -1).is_err());
        assert!(QuantumNumbers::new(2, 0.5, 0.5, 2).is_err());
    }

    #[test]
    fn sommerfeld_ground_state_matches_gamma_closed_form() {
        let c = consts();
        let q = QuantumNumbers::ground(0.5);
        for z in [1u32, 50, 100, 137] {
            let e = sommerfeld_energy(&q, z, &c).unwrap();
            let expected = c.rest_energy() * gamma_param(z, &c).unwrap();
            assert_abs_diff_eq!(e, expected, epsilon = 1e-12 * c.rest_energy());
        }
        // frozen closed-form values in rest-energy units
        let e100 = sommerfeld_energy(&q, 100, &c).unwrap() / c.rest_energy();
        assert_abs_diff_eq!(e100, 0.6837298112527134, epsilon = 1e-12);
        let e1 = sommerfeld_energy(&q, 1, &c).unwrap() / c.rest_energy();
        assert_abs_diff_eq!(e1, 0.9999733739682671, epsilon = 1e-12);
    }

    #[test]
    fn sommerfeld_rejects_supercritical() {
        let heavy = PhysicalConstants::from_alpha(1.0 / 100.0).unwrap();
        let q = QuantumNumbers::ground(0.5);
        assert!(matches!(
            sommerfeld_energy(&q, 120, &heavy),
            Err(Error::Supercritical { .. })
        ));
    }

    #[test]
    fn radial_ratio_and_normalization() {
        let c = consts();
        for z in [1u32, 20, 60, 92, 120, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let gamma = radial.gamma();
            let expected_ratio = -((1.0 - gamma) / (1.0 + gamma)).sqrt();
            for r in [0.1 / z as f64, 1.0 / z as f64, 10.0 / z as f64] {
                assert_relative_eq!(
                    radial.f_position(r) / radial.g_position(r),
                    expected_ratio,
                    max_relative = 1e-14
                );
            }
            assert_relative_eq!(radial.position_norm(48).unwrap(), 1.0, epsilon = 1e-12);
            // <1/r> = Z / gamma
            assert_relative_eq!(
                radial.mean_inverse_r(48).unwrap(),
                z as f64 / gamma,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn position_norm_against_independent_panel_quadrature() {
        let c = consts();
        for z in [1u32, 92, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            // geometric panels toward r = 0 handle the r^(2 gamma) endpoint
            let r_max = 80.0 / z as f64;
            let mut boundaries = vec![0.0];
            for k in (1..=120).rev() {
                boundaries.push(r_max * 0.5_f64.powi(k));
            }
            boundaries.push(r_max);
            let rule = quad::composite_on_panels(&boundaries, 24).unwrap();
            let norm = rule.integrate(|r| {
                if r <= 0.0 {
                    0.0
                } else {
                    let g = radial.g_position(r);
                    let f = radial.f_position(r);
                    (g * g + f * f) * r * r
                }
            });
            assert_relative_eq!(norm, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn closed_form_transforms_match_quadrature_route() {
        let c = consts();
        for z in [1u32, 60, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let zf = z as f64;
            let momenta: Vec<f64> = [1e-3, 0.1, 0.5, 1.0, 3.0, 10.0, 40.0]
                .iter()
                .map(|s| s * zf)
                .collect();
            let g_quad = bessel_transform(&radial, 0, &momenta).unwrap();
            let f_quad = bessel_transform(&radial, 1, &momenta).unwrap();
            for (k, &p) in momenta.iter().enumerate() {
                assert_relative_eq!(
                    g_quad[k],
                    radial.g_momentum(p),
                    max_relative = 1e-9,
                    epsilon = 1e-12 * radial.g_momentum(momenta[0]).abs()
                );
                assert_relative_eq!(
                    f_quad[k],
                    radial.f_momentum(p),
                    max_relative = 1e-8,
                    epsilon = 1e-12 * radial.g_momentum(momenta[0]).abs()
                );
            }
        }
    }

    #[test]
    fn transform_examples_at_zero_momentum() {
        let c = consts();
        let radial = RadialFunctions::for_ground_state(10, &c).unwrap();
        // l = 1 transform vanishes at p = 0, l = 0 one is positive
        let g0 = bessel_transform(&radial, 0, &[0.0]).unwrap()[0];
        let f0 = bessel_transform(&radial, 1, &[0.0]).unwrap()[0];
        assert!(g0 > 0.0);
        assert_abs_diff_eq!(f0, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn transform_refuses_absurd_oscillation_counts() {
        let c = consts();
        let radial = RadialFunctions::for_ground_state(1, &c).unwrap();
        assert!(matches!(
            bessel_transform(&radial, 0, &[1e9]),
            Err(Error::QuadratureNotConverged { .. })
        ));
    }

    #[test]
    fn parseval_identity_on_the_grid() {
        let c = consts();
        for z in [1u32, 20, 60, 92, 120, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let grid = ground_state_grid(&radial, GridConfig::default(), &c).unwrap();
            let momentum_norm: f64 = grid
                .radial_nodes()
                .iter()
                .zip(grid.radial_weights().iter())
                .map(|(&p, &w)| {
                    let g = radial.g_momentum(p);
                    let f = radial.f_momentum(p);
                    w * (g * g + f * f)
                })
                .sum();
            assert_abs_diff_eq!(momentum_norm, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn assembled_field_is_normalized_and_orthogonal() {
        let c = consts();
        for z in [1u32, 92, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let grid: SharedGrid =
                std::sync::Arc::new(ground_state_grid(&radial, GridConfig::default(), &c).unwrap());
            let up_spec = GroundStateSpec::new(z, Orientation::Up, &c).unwrap();
            let down_spec = GroundStateSpec::new(z, Orientation::Down, &c).unwrap();
            let up = assemble_momentum_spinor(&up_spec, &radial, &grid);
            let down = assemble_momentum_spinor(&down_spec, &radial, &grid);
            assert_abs_diff_eq!(up.norm(), 1.0, epsilon = 1e-8);
            assert_abs_diff_eq!(down.norm(), 1.0, epsilon = 1e-8);
            assert!(up.inner(&down).unwrap().norm() <= 1e-10);
        }
    }

    #[test]
    fn energy_cross_check_pins_conventions() {
        // <H0> over the momentum grid plus <-Z/r> in position space must
        // recover the bound energy; any sign or phase slip in the assembled
        // spinor breaks this.
        let c = consts();
        for z in [1u32, 60, 120] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let grid: SharedGrid =
                std::sync::Arc::new(ground_state_grid(&radial, GridConfig::default(), &c).unwrap());
            let spec = GroundStateSpec::new(z, Orientation::Up, &c).unwrap();
            let field = assemble_momentum_spinor(&spec, &radial, &grid);

            let h0: Complex64 = grid
                .nodes()
                .zip(field.values().iter())
                .map(|(node, v)| {
                    let m = crate::spin_ops::h0_matrix(node.p, &c);
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (r, vr) in v.iter().enumerate() {
                        for (s, vs) in v.iter().enumerate() {
                            acc += vr.conj() * m[(r, s)] * vs;
                        }
                    }
                    acc * Complex64::new(node.weight, 0.0)
                })
                .sum();
            assert!(h0.im.abs() <= 1e-9 * c.rest_energy());

            let coulomb = -(z as f64) * radial.mean_inverse_r(48).unwrap();
            let total = h0.re + coulomb;
            assert_relative_eq!(total, spec.energy, max_relative = 1e-6);
        }
    }

    #[test]
    fn grid_tail_bound_is_within_tolerance() {
        let c = consts();
        for z in [1u32, 137] {
            let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
            let grid = ground_state_grid(&radial, GridConfig::default(), &c).unwrap();
            assert!(grid.tail_bound < GRID_TAIL_TOLERANCE);
        }
    }
}

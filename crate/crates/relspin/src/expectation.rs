//! Spin expectation values, variances, superpositions, bounds and
//! atomic-number scans on the hydrogenic ground-state doublet.
//!
//! Every expectation is a weighted sum over the spherical momentum grid in a
//! fixed node order, so results are bit-reproducible for a given
//! configuration. The per-result quadrature error estimate is the difference
//! against a radially order-doubled grid; the angular rule is already exact
//! for these integrands, so radial resolution is the only moving part.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dirac::{Axis, Matrix4C, PhysicalConstants};
use crate::grid::GridConfig;
use crate::hydrogen::{
    assemble_momentum_spinor, ground_state_grid, GroundStateSpec, MomentumSpinorField, Orientation,
    RadialFunctions,
};
use crate::spin_ops::{spin_matrix, Momentum3, SpinKind};
use crate::Result;

/// Slack allowed when checking the superposition bounds; the mixing term
/// vanishes on the grid to roundoff, so this is pure quadrature headroom.
pub const BOUNDS_EPSILON: f64 = 1e-9;

/// Mixing angle and relative phase of a ground-state superposition
/// `cos(eta/2) up + sin(eta/2) e^(i zeta) down`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionParams {
    eta: f64,
    zeta: f64,
}

impl SuperpositionParams {
    /// Reduces the angles to `eta in [0, pi]`, `zeta in [0, 2 pi)`; the
    /// reduction `eta -> 2 pi - eta`, `zeta -> zeta + pi` leaves the state
    /// unchanged up to a global phase.
    pub fn new(eta: f64, zeta: f64) -> Self {
        let tau = std::f64::consts::TAU;
        let mut eta = eta.rem_euclid(tau);
        let mut zeta = zeta;
        if eta > std::f64::consts::PI {
            eta = tau - eta;
            zeta += std::f64::consts::PI;
        }
        Self {
            eta,
            zeta: zeta.rem_euclid(tau),
        }
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    /// Amplitudes `(cos(eta/2), sin(eta/2) e^(i zeta))`.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let (s, c) = (0.5 * self.eta).sin_cos();
        (Complex64::new(c, 0.0), Complex64::from_polar(s, self.zeta))
    }
}

/// One spin expectation value with its variance and quadrature error
/// estimate.
#[derive(Debug, Clone, Copy)]
pub struct ExpectationResult {
    pub kind: SpinKind,
    pub z: u32,
    pub axis: Axis,
    pub value: f64,
    pub variance: f64,
    pub quadrature_error_estimate: f64,
}

/// Weighted expectation `sum_nodes w psi^dagger M(p) psi` of a
/// momentum-dependent matrix, in fixed node order.
pub fn matrix_expectation<F>(field: &MomentumSpinorField, mut op: F) -> Result<Complex64>
where
    F: FnMut(Momentum3) -> Result<Matrix4C>,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for (node, v) in field.grid().nodes().zip(field.values().iter()) {
        let m = op(node.p)?;
        acc += quadratic_form(&m, v, v) * Complex64::new(node.weight, 0.0);
    }
    Ok(acc)
}

#[inline]
fn quadratic_form(m: &Matrix4C, bra: &[Complex64; 4], ket: &[Complex64; 4]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (r, br) in bra.iter().enumerate() {
        let mut row = Complex64::new(0.0, 0.0);
        for (s, ks) in ket.iter().enumerate() {
            row += m[(r, s)] * ks;
        }
        acc += br.conj() * row;
    }
    acc
}

/// First and second spin moments of a state in one grid pass.
#[derive(Debug, Clone, Copy)]
pub struct SpinMoments {
    /// `Re <S>`.
    pub value: f64,
    /// `|Im <S>|`, a Hermiticity diagnostic.
    pub imag: f64,
    /// `Re <S^2> - value^2`, clamped at zero against roundoff.
    pub variance: f64,
}

/// Compute `<S_axis>` and the variance over the state's grid.
pub fn spin_moments(
    kind: SpinKind,
    field: &MomentumSpinorField,
    axis: Axis,
    consts: &PhysicalConstants,
) -> Result<SpinMoments> {
    let mut first = Complex64::new(0.0, 0.0);
    let mut second = Complex64::new(0.0, 0.0);
    for (node, v) in field.grid().nodes().zip(field.values().iter()) {
        let s = spin_matrix(kind, axis, node.p, consts)?;
        let w = Complex64::new(node.weight, 0.0);
        // apply S once and reuse for both moments
        let mut sv = [Complex64::new(0.0, 0.0); 4];
        for (r, slot) in sv.iter_mut().enumerate() {
            for (c, vc) in v.iter().enumerate() {
                *slot += s[(r, c)] * vc;
            }
        }
        let braket = |a: &[Complex64; 4], b: &[Complex64; 4]| -> Complex64 {
            a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
        };
        first += braket(v, &sv) * w;
        // <S^2> as (S^dagger psi)^dagger (S psi) would assume Hermiticity;
        // form S(S psi) instead so the non-Hermitian family stays honest
        let mut ssv = [Complex64::new(0.0, 0.0); 4];
        for (r, slot) in ssv.iter_mut().enumerate() {
            for (c, svc) in sv.iter().enumerate() {
                *slot += s[(r, c)] * svc;
            }
        }
        second += braket(v, &ssv) * w;
    }
    let value = first.re;
    let variance = (second.re - value * value).max(0.0);
    Ok(SpinMoments {
        value,
        imag: first.im.abs(),
        variance,
    })
}

/// Cross matrix element `<bra | S_axis | ket>` between two states on a
/// common grid.
pub fn mixing_term(
    kind: SpinKind,
    bra: &MomentumSpinorField,
    ket: &MomentumSpinorField,
    axis: Axis,
    consts: &PhysicalConstants,
) -> Result<Complex64> {
    if !bra.grid().compatible(ket.grid()) {
        return Err(crate::Error::GridMismatch);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for ((node, b), k) in bra
        .grid()
        .nodes()
        .zip(bra.values().iter())
        .zip(ket.values().iter())
    {
        let s = spin_matrix(kind, axis, node.p, consts)?;
        acc += quadratic_form(&s, b, k) * Complex64::new(node.weight, 0.0);
    }
    Ok(acc)
}

/// Expectation of a superposition from the three matrix elements:
/// `cos^2(eta/2) <up|S|up> + sin^2(eta/2) <down|S|down>
///  + 2 cos(eta/2) sin(eta/2) cos(zeta) Re <up|S|down>`.
pub fn superposition_expectation(
    kind: SpinKind,
    params: SuperpositionParams,
    up: &MomentumSpinorField,
    down: &MomentumSpinorField,
    axis: Axis,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let up_value = spin_moments(kind, up, axis, consts)?.value;
    let down_value = spin_moments(kind, down, axis, consts)?.value;
    let mixing = mixing_term(kind, up, down, axis, consts)?.re;
    let (half_sin, half_cos) = (0.5 * params.eta).sin_cos();
    Ok(half_cos * half_cos * up_value
        + half_sin * half_sin * down_value
        + 2.0 * half_cos * half_sin * params.zeta.cos() * mixing)
}

/// The superposed spinor field itself, for direct-quadrature cross-checks.
pub fn superposed_field(
    params: SuperpositionParams,
    up: &MomentumSpinorField,
    down: &MomentumSpinorField,
) -> Result<MomentumSpinorField> {
    let (ca, cb) = params.amplitudes();
    MomentumSpinorField::linear_combination(ca, up, cb, down)
}

/// Outcome of sampling the superposition bounds for one family.
#[derive(Debug, Clone, Copy)]
pub struct BoundsOutcome {
    pub kind: SpinKind,
    pub z: u32,
    pub samples: usize,
    pub lower: f64,
    pub upper: f64,
    /// Worst excursion outside `[lower - eps, upper + eps]`; zero when the
    /// inequality held for every sample.
    pub max_violation: f64,
    pub holds: bool,
    /// Values attained at `eta = 0` and `eta = pi`.
    pub at_eta_zero: f64,
    pub at_eta_pi: f64,
}

/// Check that sampled superpositions stay between the down and up
/// expectations, with the extremes attained at `eta = 0` and `eta = pi`.
#[allow(clippy::too_many_arguments)]
pub fn bounds_check(
    kind: SpinKind,
    z: u32,
    up: &MomentumSpinorField,
    down: &MomentumSpinorField,
    axis: Axis,
    samples: usize,
    seed: u64,
    consts: &PhysicalConstants,
) -> Result<BoundsOutcome> {
    use rand::{Rng, SeedableRng};
    let up_value = spin_moments(kind, up, axis, consts)?.value;
    let down_value = spin_moments(kind, down, axis, consts)?.value;
    let mixing = mixing_term(kind, up, down, axis, consts)?.re;
    let (lower, upper) = if down_value <= up_value {
        (down_value, up_value)
    } else {
        (up_value, down_value)
    };

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut max_violation: f64 = 0.0;
    let evaluate = |params: SuperpositionParams| -> f64 {
        let (hs, hc) = (0.5 * params.eta()).sin_cos();
        hc * hc * up_value + hs * hs * down_value + 2.0 * hc * hs * params.zeta().cos() * mixing
    };
    for _ in 0..samples {
        let params = SuperpositionParams::new(
            rng.gen_range(0.0..std::f64::consts::PI),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let value = evaluate(params);
        max_violation = max_violation
            .max(lower - BOUNDS_EPSILON - value)
            .max(value - upper - BOUNDS_EPSILON);
    }
    let at_eta_zero = evaluate(SuperpositionParams::new(0.0, 0.0));
    let at_eta_pi = evaluate(SuperpositionParams::new(std::f64::consts::PI, 0.0));
    Ok(BoundsOutcome {
        kind,
        z,
        samples,
        lower,
        upper,
        max_violation: max_violation.max(0.0),
        holds: max_violation <= 0.0,
        at_eta_zero,
        at_eta_pi,
    })
}

/// Ground-state doublet of one ion on its sized momentum grid, together with
/// the radially refined copies used for error estimates.
pub struct ZPoint {
    pub z: u32,
    pub spec_up: GroundStateSpec,
    pub spec_down: GroundStateSpec,
    pub up: MomentumSpinorField,
    pub down: MomentumSpinorField,
    up_refined: MomentumSpinorField,
    down_refined: MomentumSpinorField,
    consts: PhysicalConstants,
}

impl ZPoint {
    pub fn new(z: u32, config: GridConfig, consts: &PhysicalConstants) -> Result<Self> {
        let radial = RadialFunctions::for_ground_state(z, consts)?;
        let grid = std::sync::Arc::new(ground_state_grid(&radial, config, consts)?);
        let fine = std::sync::Arc::new(grid.refined_radial()?);
        let spec_up = GroundStateSpec::new(z, Orientation::Up, consts)?;
        let spec_down = GroundStateSpec::new(z, Orientation::Down, consts)?;
        Ok(Self {
            z,
            spec_up,
            spec_down,
            up: assemble_momentum_spinor(&spec_up, &radial, &grid),
            down: assemble_momentum_spinor(&spec_down, &radial, &grid),
            up_refined: assemble_momentum_spinor(&spec_up, &radial, &fine),
            down_refined: assemble_momentum_spinor(&spec_down, &radial, &fine),
            consts: *consts,
        })
    }

    pub fn field(&self, orientation: Orientation) -> &MomentumSpinorField {
        match orientation {
            Orientation::Up => &self.up,
            Orientation::Down => &self.down,
        }
    }

    fn refined_field(&self, orientation: Orientation) -> &MomentumSpinorField {
        match orientation {
            Orientation::Up => &self.up_refined,
            Orientation::Down => &self.down_refined,
        }
    }

    /// Expectation with variance and the order-doubling error estimate.
    pub fn expectation(
        &self,
        kind: SpinKind,
        orientation: Orientation,
        axis: Axis,
    ) -> Result<ExpectationResult> {
        let base = spin_moments(kind, self.field(orientation), axis, &self.consts)?;
        let fine = spin_moments(kind, self.refined_field(orientation), axis, &self.consts)?;
        Ok(ExpectationResult {
            kind,
            z: self.z,
            axis,
            value: base.value,
            variance: base.variance,
            quadrature_error_estimate: (base.value - fine.value).abs(),
        })
    }
}

/// Scan spin expectations of the spin-up ground state over atomic numbers.
///
/// Rows come out in the fixed report order: family enumeration order first,
/// then Z ascending. Each Z is processed independently (and in parallel);
/// within a row the quadrature order is fixed, so output is deterministic.
pub fn z_scan(
    kinds: &[SpinKind],
    z_values: &[u32],
    axis: Axis,
    config: GridConfig,
    consts: &PhysicalConstants,
) -> Result<Vec<ExpectationResult>> {
    let mut zs: Vec<u32> = z_values.to_vec();
    zs.sort_unstable();
    zs.dedup();
    let kinds: Vec<SpinKind> = SpinKind::ALL
        .into_iter()
        .filter(|k| kinds.contains(k))
        .collect();

    let per_z: Result<Vec<Vec<ExpectationResult>>> = zs
        .par_iter()
        .map(|&z| {
            let point = ZPoint::new(z, config, consts)?;
            kinds
                .iter()
                .map(|&kind| point.expectation(kind, Orientation::Up, axis))
                .collect()
        })
        .collect();
    let per_z = per_z?;

    let mut rows = Vec::with_capacity(zs.len() * kinds.len());
    for kind_index in 0..kinds.len() {
        for z_rows in &per_z {
            rows.push(z_rows[kind_index]);
        }
    }
    Ok(rows)
}

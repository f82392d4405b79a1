//! The bundled invariant suite behind `relspin verify`: one outcome per
//! group, each aggregating the checks its modules promise.

use crate::checks::table1_report;
use crate::dirac::{
    self, anticommutator, commutator, max_abs_entry, Axis, Matrix4C, PhysicalConstants,
};
use crate::expectation::{
    mixing_term, spin_moments, superposed_field, superposition_expectation, SuperpositionParams,
    ZPoint,
};
use crate::grid::GridConfig;
use crate::hydrogen::{self, Orientation, QuantumNumbers, RadialFunctions};
use crate::spin_ops::SpinKind;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub table1_samples: usize,
    pub grid: GridConfig,
    pub consts: PhysicalConstants,
    /// Fault-injection hook: corrupt one `beta` entry so the Dirac-algebra
    /// group demonstrably trips.
    pub corrupt_beta: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            table1_samples: 1000,
            grid: GridConfig::default(),
            consts: PhysicalConstants::default(),
            corrupt_beta: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl GroupOutcome {
    fn pass(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail,
        }
    }

    fn from_error(name: &'static str, err: &crate::Error) -> Self {
        Self::fail(name, format!("error: {err}"))
    }
}

/// Run every group; outcomes come back in a fixed order.
pub fn run(config: &VerifyConfig) -> Vec<GroupOutcome> {
    vec![
        dirac_algebra_group(config),
        table_properties_group(config),
        hydrogen_group(config),
        expectation_group(config),
        convergence_group(config),
    ]
}

fn dirac_algebra_group(config: &VerifyConfig) -> GroupOutcome {
    const NAME: &str = "dirac-algebra";
    let beta = if config.corrupt_beta {
        let mut b = dirac::beta();
        b[(2, 2)] = Complex64::new(1.0, 0.0);
        b
    } else {
        dirac::beta()
    };
    let identity = Matrix4C::identity();
    let mut worst: f64 = 0.0;
    for i in Axis::ALL {
        let ai = dirac::alpha(i);
        for k in Axis::ALL {
            let target = if i == k {
                identity * Complex64::new(2.0, 0.0)
            } else {
                Matrix4C::zeros()
            };
            worst = worst.max(max_abs_entry(
                &(anticommutator(&ai, &dirac::alpha(k)) - target),
            ));
        }
        worst = worst.max(max_abs_entry(&anticommutator(&ai, &beta)));
        let sigma = dirac::sigma(i);
        worst = worst.max(max_abs_entry(&(sigma * sigma - identity)));
        worst = worst.max(max_abs_entry(&commutator(&beta, &sigma)));
        worst = worst.max(dirac::hermiticity_defect(&sigma));
        worst = worst.max(sigma.trace().norm());
    }
    worst = worst.max(max_abs_entry(&(beta * beta - identity)));

    let detail = format!("worst identity defect {worst:.3e} (tolerance 1e-14)");
    if worst <= 1e-14 {
        GroupOutcome::pass(NAME, detail)
    } else {
        GroupOutcome::fail(NAME, detail)
    }
}

fn table_properties_group(config: &VerifyConfig) -> GroupOutcome {
    const NAME: &str = "table-properties";
    let reports = match table1_report(config.table1_samples, config.seed, &config.consts) {
        Ok(r) => r,
        Err(e) => return GroupOutcome::from_error(NAME, &e),
    };
    let mismatches: Vec<String> = reports
        .iter()
        .filter(|r| !r.matches_reference())
        .map(|r| r.kind.to_string())
        .collect();
    let worst_cov = reports
        .iter()
        .map(|r| r.covariance_defect)
        .fold(0.0, f64::max);
    if mismatches.is_empty() {
        GroupOutcome::pass(
            NAME,
            format!(
                "all 18 cells match over {} momenta, worst covariance defect {worst_cov:.3e}",
                config.table1_samples
            ),
        )
    } else {
        GroupOutcome::fail(
            NAME,
            format!("mismatched families: {}", mismatches.join(", ")),
        )
    }
}

fn hydrogen_group(config: &VerifyConfig) -> GroupOutcome {
    const NAME: &str = "hydrogen-states";
    match hydrogen_group_inner(config) {
        Ok(detail) => GroupOutcome::pass(NAME, detail),
        Err(Failure::Check(detail)) => GroupOutcome::fail(NAME, detail),
        Err(Failure::Lib(e)) => GroupOutcome::from_error(NAME, &e),
    }
}

enum Failure {
    Check(String),
    Lib(crate::Error),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Lib(e)
    }
}

fn hydrogen_group_inner(config: &VerifyConfig) -> std::result::Result<String, Failure> {
    let consts = &config.consts;
    let rest = consts.rest_energy();

    // closed-form energy consistency across the whole range
    let q = QuantumNumbers::ground(0.5);
    let mut worst_energy: f64 = 0.0;
    for z in 1..=hydrogen::Z_MAX {
        let e = hydrogen::sommerfeld_energy(&q, z, consts)?;
        let gamma = hydrogen::gamma_param(z, consts)?;
        worst_energy = worst_energy.max((e - rest * gamma).abs() / rest);
    }
    if worst_energy > 1e-12 {
        return Err(Failure::Check(format!(
            "bound energy vs closed form: relative defect {worst_energy:.3e} > 1e-12"
        )));
    }

    // momentum-grid norm against the position normalization
    let mut worst_parseval: f64 = 0.0;
    for z in [1, 20, 60, 92, 120, hydrogen::Z_MAX] {
        let point = ZPoint::new(z, config.grid, consts)?;
        worst_parseval = worst_parseval.max((point.up.norm() - 1.0).abs());
        worst_parseval = worst_parseval.max((point.down.norm() - 1.0).abs());
    }
    if worst_parseval > 1e-8 {
        return Err(Failure::Check(format!(
            "momentum norm vs position norm: defect {worst_parseval:.3e} > 1e-8"
        )));
    }

    // kinetic + potential energy recovers the bound energy
    let mut worst_cross: f64 = 0.0;
    for z in [1, 60, 120] {
        let radial = RadialFunctions::for_ground_state(z, consts)?;
        let point = ZPoint::new(z, config.grid, consts)?;
        let h0 = crate::expectation::matrix_expectation(&point.up, |p| {
            Ok(crate::spin_ops::h0_matrix(p, consts))
        })?;
        let coulomb = -(z as f64) * radial.mean_inverse_r(48)?;
        let defect = (h0.re + coulomb - point.spec_up.energy).abs() / point.spec_up.energy;
        worst_cross = worst_cross.max(defect);
    }
    if worst_cross > 1e-6 {
        return Err(Failure::Check(format!(
            "energy cross-check: relative defect {worst_cross:.3e} > 1e-6"
        )));
    }

    Ok(format!(
        "energy defect {worst_energy:.1e}, norm defect {worst_parseval:.1e}, energy cross-check {worst_cross:.1e}"
    ))
}

fn expectation_group(config: &VerifyConfig) -> GroupOutcome {
    const NAME: &str = "spin-expectations";
    match expectation_group_inner(config) {
        Ok(detail) => GroupOutcome::pass(NAME, detail),
        Err(Failure::Check(detail)) => GroupOutcome::fail(NAME, detail),
        Err(Failure::Lib(e)) => GroupOutcome::from_error(NAME, &e),
    }
}

fn expectation_group_inner(config: &VerifyConfig) -> std::result::Result<String, Failure> {
    let consts = &config.consts;

    // spin-up/down ground states are exact +/- 1/2 eigenstates of the Pryce
    // component along the quantization axis
    for z in [1, 92, hydrogen::Z_MAX] {
        let point = ZPoint::new(z, config.grid, consts)?;
        for orientation in [Orientation::Up, Orientation::Down] {
            let r = point.expectation(SpinKind::Pryce, orientation, Axis::Z)?;
            let sign = if orientation == Orientation::Up {
                1.0
            } else {
                -1.0
            };
            if (r.value - sign * 0.5).abs() > 1e-8 || r.variance > 1e-8 {
                return Err(Failure::Check(format!(
                    "Pryce eigenstate property broken at Z={z}: value {} variance {}",
                    r.value, r.variance
                )));
            }
        }
    }

    // antisymmetry, vanishing mixing terms, transverse components
    for z in [1, 92] {
        let point = ZPoint::new(z, config.grid, consts)?;
        for kind in SpinKind::ALL {
            let up = point.expectation(kind, Orientation::Up, Axis::Z)?;
            let down = point.expectation(kind, Orientation::Down, Axis::Z)?;
            if (up.value + down.value).abs() > 1e-8 {
                return Err(Failure::Check(format!(
                    "antisymmetry broken for {kind} at Z={z}"
                )));
            }
            let mix = mixing_term(kind, &point.up, &point.down, Axis::Z, consts)?;
            if mix.re.abs() > 1e-8 {
                return Err(Failure::Check(format!(
                    "mixing term Re = {:.3e} for {kind} at Z={z}",
                    mix.re
                )));
            }
            for axis in [Axis::X, Axis::Y] {
                let t = spin_moments(kind, &point.up, axis, consts)?;
                if t.value.abs() > 1e-10 {
                    return Err(Failure::Check(format!(
                        "transverse component {axis} = {:.3e} for {kind} at Z={z}",
                        t.value
                    )));
                }
            }
        }
    }

    // superposition formula against direct quadrature on the superposed state
    let point = ZPoint::new(92, config.grid, consts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5ee9);
    let mut worst_super: f64 = 0.0;
    for _ in 0..20 {
        let params = SuperpositionParams::new(
            rng.gen_range(0.0..std::f64::consts::PI),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        for kind in SpinKind::ALL {
            let formula =
                superposition_expectation(kind, params, &point.up, &point.down, Axis::Z, consts)?;
            let state = superposed_field(params, &point.up, &point.down)?;
            let direct = spin_moments(kind, &state, Axis::Z, consts)?.value;
            worst_super = worst_super.max((formula - direct).abs());
        }
    }
    if worst_super > 1e-10 {
        return Err(Failure::Check(format!(
            "superposition formula vs direct quadrature: defect {worst_super:.3e} > 1e-10"
        )));
    }

    Ok(format!(
        "Pryce eigenstates, antisymmetry, mixing terms and superpositions hold (worst superposition defect {worst_super:.1e})"
    ))
}

fn convergence_group(config: &VerifyConfig) -> GroupOutcome {
    const NAME: &str = "grid-convergence";
    match convergence_group_inner(config) {
        Ok(detail) => GroupOutcome::pass(NAME, detail),
        Err(Failure::Check(detail)) => GroupOutcome::fail(NAME, detail),
        Err(Failure::Lib(e)) => GroupOutcome::from_error(NAME, &e),
    }
}

fn convergence_group_inner(config: &VerifyConfig) -> std::result::Result<String, Failure> {
    let consts = &config.consts;
    let coarse = ZPoint::new(92, config.grid, consts)?;
    let fine = ZPoint::new(
        92,
        GridConfig {
            radial_order: 2 * config.grid.radial_order,
            angular_order: 2 * config.grid.angular_order,
        },
        consts,
    )?;
    let mut worst: f64 = 0.0;
    for kind in SpinKind::ALL {
        for axis in Axis::ALL {
            let a = coarse.expectation(kind, Orientation::Up, axis)?;
            let b = fine.expectation(kind, Orientation::Up, axis)?;
            worst = worst.max((a.value - b.value).abs());
            worst = worst.max((a.variance - b.variance).abs());
        }
    }
    let norm_shift = (coarse.up.norm() - fine.up.norm()).abs();
    worst = worst.max(norm_shift);
    if worst > 1e-6 {
        return Err(Failure::Check(format!(
            "doubling quadrature orders moves results by {worst:.3e} > 1e-6"
        )));
    }
    Ok(format!(
        "order doubling shifts results by at most {worst:.1e}"
    ))
}

/// True when every group passed.
pub fn all_passed(outcomes: &[GroupOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}
